#include "grim/enumerate.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "grim/canonical.hpp"

namespace grim {

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1) {
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return g;
}

namespace {

std::vector<Graph> generate_classes(std::size_t n);

}  // namespace

std::vector<Graph> nonisomorphic_graphs(std::size_t n) {
  if (n > 10) throw std::invalid_argument("nonisomorphic_graphs: n > 10");
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<Graph>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_classes(n)).first;
  return it->second;
}

namespace {

std::vector<Graph> generate_classes(std::size_t n) {
  std::map<CanonicalKey, Graph> classes;
  if (n == 0) {
    classes.emplace(canonical_form(Graph{}), Graph{});
  } else {
    // Every graph on n vertices is some graph on n-1 vertices plus a vertex.
    for (const Graph& base : generate_classes(n - 1)) {
      for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
        Graph g = base;
        const auto v = static_cast<VertexId>(n - 1);
        g.add_vertex(v);
        for (std::size_t i = 0; i + 1 < n; ++i) {
          if ((nb >> i) & 1) g.add_edge(static_cast<VertexId>(i), v);
        }
        classes.try_emplace(canonical_form(g, 16), std::move(g));
      }
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

}  // namespace

}  // namespace grim
