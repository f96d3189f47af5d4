#include "grim/engine.hpp"

#include <charconv>

#include "grim/family.hpp"
#include "grim/graph6.hpp"

namespace grim {

Graph normalize(Graph g) {
  std::vector<VertexId> keep;
  keep.reserve(g.order());
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 0) keep.push_back(v);
  }
  if (keep.size() == g.order()) return g;
  return g.induced(keep);
}

std::vector<VertexId> legal_moves(const Graph& g) {
  auto ids = g.vertices();
  return {ids.begin(), ids.end()};
}

Graph follower(const Graph& g, VertexId vertex) {
  auto nb = g.neighbors(vertex);
  std::vector<VertexId> former(nb.begin(), nb.end());
  Graph out = g;
  out.remove_vertex(vertex);
  for (VertexId w : former) {
    if (out.degree(w) == 0) out.remove_vertex(w);
  }
  return normalize(std::move(out));
}

WeightedGraph make_weighted(Graph g, std::vector<std::uint32_t> weights) {
  if (weights.size() != g.order()) {
    throw GraphError("weighted graph: " + std::to_string(weights.size()) +
                     " weights for " + std::to_string(g.order()) + " vertices");
  }
  for (auto w : weights) {
    if (w == 0) throw GraphError("weighted graph: weights must be >= 1");
  }
  return WeightedGraph{std::move(g), std::move(weights)};
}

WeightedGraph normalize(const WeightedGraph& wg) {
  WeightedGraph out;
  out.graph = normalize(wg.graph);
  out.weights.reserve(out.graph.order());
  for (VertexId v : out.graph.vertices()) out.weights.push_back(wg.weight_of(v));
  return out;
}

std::vector<VertexId> weighted_moves(const WeightedGraph& wg) {
  return legal_moves(wg.graph);
}

WeightedGraph weighted_follower(const WeightedGraph& wg, VertexId vertex) {
  const std::size_t i = wg.graph.index_of(vertex);
  if (wg.weights[i] > 1) {
    WeightedGraph out = wg;
    --out.weights[i];
    return out;
  }
  Graph next = follower(wg.graph, vertex);
  WeightedGraph out;
  out.weights.reserve(next.order());
  for (VertexId v : next.vertices()) out.weights.push_back(wg.weight_of(v));
  out.graph = std::move(next);
  return out;
}

Graph blowup(const WeightedGraph& wg) {
  const auto ids = wg.graph.vertices();
  std::vector<VertexId> first(ids.size() + 1, 0);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    first[i + 1] = first[i] + wg.weights[i];
  }
  Graph out(first.back());
  for (const auto& [u, v] : wg.graph.edges()) {
    const std::size_t a = wg.graph.index_of(u);
    const std::size_t b = wg.graph.index_of(v);
    for (VertexId x = first[a]; x < first[a + 1]; ++x) {
      for (VertexId y = first[b]; y < first[b + 1]; ++y) out.add_edge(x, y);
    }
  }
  return out;
}

WeightedGraph parse_weighted(std::string_view text) {
  if (!text.starts_with("wg:")) throw SpecError("weighted graph must start with 'wg:'");
  text.remove_prefix(3);
  const auto semi = text.find(';');
  if (semi == std::string_view::npos) throw SpecError("weighted graph: missing ';'");
  Graph g = parse_graph6(text.substr(0, semi));
  std::vector<std::uint32_t> weights;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    std::uint32_t w = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), w);
    if (ec != std::errc{} || ptr == rest.data()) {
      throw SpecError("weighted graph: bad weight list");
    }
    weights.push_back(w);
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    if (!rest.empty()) {
      if (rest.front() != ',' || rest.size() == 1) {
        throw SpecError("weighted graph: bad weight list");
      }
      rest.remove_prefix(1);
    }
  }
  try {
    return make_weighted(std::move(g), std::move(weights));
  } catch (const GraphError& e) {
    throw SpecError(e.what());
  }
}

std::string emit_weighted(const WeightedGraph& wg) {
  std::string out = "wg:" + emit_graph6(wg.graph) + ";";
  for (std::size_t i = 0; i < wg.weights.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(wg.weights[i]);
  }
  return out;
}

}  // namespace grim
