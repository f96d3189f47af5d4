#include "grim/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "grim/graph6.hpp"

namespace grim {

namespace {

constexpr int kMaxNesting = 8;
// Keeps a typo like "path:99999999" from allocating the machine away.
constexpr std::size_t kMaxFamilySize = 1u << 16;

void append_shifted(Graph& out, const Graph& src, VertexId offset) {
  for (std::size_t i = 0; i < src.order(); ++i) {
    out.add_vertex(offset + static_cast<VertexId>(i));
  }
  for (const auto& [u, v] : src.edges()) {
    out.add_edge(offset + static_cast<VertexId>(src.index_of(u)),
                 offset + static_cast<VertexId>(src.index_of(v)));
  }
}

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = parse_spec(0);
    if (pos_ != text_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw SpecError("bad family spec '" + std::string(text_) + "' at offset " +
                    std::to_string(pos_) + ": " + why);
  }

  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) {
      fail(std::string("expected '") + c + "'");
    }
    ++pos_;
  }

  std::size_t parse_int() {
    std::size_t value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    if (value > kMaxFamilySize) fail("size too large");
    return value;
  }

  std::size_t parse_size(std::size_t minimum, const char* family) {
    std::size_t n = parse_int();
    if (n < minimum) {
      fail(std::string(family) + " needs size >= " + std::to_string(minimum));
    }
    return n;
  }

  Graph parse_spec(int depth) {
    if (depth > kMaxNesting) fail("nesting deeper than 8");
    if (consume("path:")) return path_graph(parse_size(1, "path"));
    if (consume("cycle:")) return cycle_graph(parse_size(3, "cycle"));
    if (consume("wheel:")) return wheel_graph(parse_size(4, "wheel"));
    if (consume("complete:")) return complete_graph(parse_size(1, "complete"));
    if (consume("star:")) return star_graph(parse_size(1, "star"));
    if (consume("kpartite:")) {
      std::vector<std::size_t> parts{parse_size(1, "kpartite")};
      while (pos_ < text_.size() && text_[pos_] == ',' &&
             pos_ + 1 < text_.size() && text_[pos_ + 1] >= '0' &&
             text_[pos_ + 1] <= '9') {
        ++pos_;
        parts.push_back(parse_size(1, "kpartite"));
      }
      return complete_multipartite(parts);
    }
    if (consume("g6:")) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') {
        ++pos_;
      }
      try {
        return parse_graph6(text_.substr(start, pos_ - start));
      } catch (const Graph6Error& e) {
        fail(e.what());
      }
    }
    for (auto [name, op] : {std::pair{"union(", 0}, {"join(", 1}, {"cart(", 2}}) {
      if (!consume(name)) continue;
      Graph a = parse_spec(depth + 1);
      expect(',');
      Graph b = parse_spec(depth + 1);
      expect(')');
      if (op == 0) return disjoint_union(a, b);
      if (op == 1) return join(a, b);
      if (a.empty() || b.empty()) fail("cartesian product of empty graph");
      return cartesian_product(a, b);
    }
    fail("unknown family");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    g.add_edge(static_cast<VertexId>(i - 1), static_cast<VertexId>(i));
  }
  return g;
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw SpecError("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(0, static_cast<VertexId>(n - 1));
  return g;
}

Graph wheel_graph(std::size_t n) {
  if (n < 4) throw SpecError("wheel needs at least 4 vertices");
  return join(cycle_graph(n - 1), complete_graph(1));
}

Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  return g;
}

Graph star_graph(std::size_t n) {
  const std::size_t parts[] = {1, n};
  return complete_multipartite(parts);
}

Graph complete_multipartite(std::span<const std::size_t> parts) {
  std::size_t n = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  Graph g(n);
  std::vector<std::size_t> part_of;
  part_of.reserve(n);
  for (std::size_t p = 0; p < parts.size(); ++p) {
    if (parts[p] == 0) throw SpecError("multipartite part of size 0");
    part_of.insert(part_of.end(), parts[p], p);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (part_of[i] != part_of[j]) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out;
  append_shifted(out, g, 0);
  append_shifted(out, h, static_cast<VertexId>(g.order()));
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const auto ng = static_cast<VertexId>(g.order());
  const auto nh = static_cast<VertexId>(h.order());
  for (VertexId i = 0; i < ng; ++i) {
    for (VertexId j = 0; j < nh; ++j) out.add_edge(i, ng + j);
  }
  return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.empty() || h.empty()) {
    throw GraphError("cartesian product needs nonempty operands");
  }
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  Graph out(ng * nh);
  auto id = [nh](std::size_t i, std::size_t j) {
    return static_cast<VertexId>(i * nh + j);
  };
  for (std::size_t i = 0; i < ng; ++i) {
    for (const auto& [y, z] : h.edges()) {
      out.add_edge(id(i, h.index_of(y)), id(i, h.index_of(z)));
    }
  }
  for (std::size_t j = 0; j < nh; ++j) {
    for (const auto& [x, w] : g.edges()) {
      out.add_edge(id(g.index_of(x), j), id(g.index_of(w), j));
    }
  }
  return out;
}

std::vector<Graph> components(const Graph& g) {
  std::vector<Graph> out;
  for (const auto& members : component_vertex_sets(g)) out.push_back(g.induced(members));
  return out;
}

std::vector<std::vector<VertexId>> component_vertex_sets(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<bool> seen(g.order(), false);
  std::vector<VertexId> stack;
  for (std::size_t start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> members;
    seen[start] = true;
    stack.push_back(g.vertices()[start]);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (VertexId w : g.neighbors(v)) {
        std::size_t wi = g.index_of(w);
        if (!seen[wi]) {
          seen[wi] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return component_vertex_sets(g).size() <= 1; }

Graph make_family(std::string_view spec) { return SpecParser(spec).parse(); }

std::vector<std::size_t> multipartite_parts(std::string_view spec) {
  auto numbers = [&](std::string_view rest) -> std::vector<std::size_t> {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t value = 0;
      auto [ptr, ec] =
          std::from_chars(rest.data() + pos, rest.data() + rest.size(), value);
      if (ec != std::errc{} || ptr == rest.data() + pos || value == 0) {
        return {};
      }
      out.push_back(value);
      pos = static_cast<std::size_t>(ptr - rest.data());
      if (pos == rest.size()) return out;
      if (rest[pos] != ',') return {};
      ++pos;
    }
    return {};
  };
  if (spec.starts_with("kpartite:")) return numbers(spec.substr(9));
  if (spec.starts_with("complete:")) {
    auto n = numbers(spec.substr(9));
    if (n.size() != 1) return {};
    return std::vector<std::size_t>(n[0], 1);
  }
  if (spec.starts_with("star:")) {
    auto n = numbers(spec.substr(5));
    if (n.size() != 1) return {};
    return {1, n[0]};
  }
  return {};
}

}  // namespace grim
