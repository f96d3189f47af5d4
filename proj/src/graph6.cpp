#include "grim/graph6.hpp"

namespace grim {

namespace {

constexpr char kBias = 63;

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw Graph6Error("graph6: byte out of range");
  }
  const auto header = static_cast<unsigned char>(text[0]);
  if (header == 126) throw Graph6Error("graph6: long form (n > 62) unsupported");
  const std::size_t n = header - kBias;
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw Graph6Error("graph6: truncated bit field");
  if (text.size() - 1 > bytes) throw Graph6Error("graph6: trailing bytes");

  Graph g(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = text[1 + k / 6] - kBias;
      if ((chunk >> (5 - k % 6)) & 1) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6MaxOrder) throw Graph6Error("graph6: n > 62 unsupported");
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  auto ids = g.vertices();
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(ids[i], ids[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

}  // namespace grim
