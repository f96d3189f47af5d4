#pragma once

#include <random>

#include "grim/graph.hpp"
#include "oracles.hpp"

namespace testing_support {

// Bitmask rows of g with vertices renumbered by position.
inline oracle::Rows to_rows(const grim::Graph& g) {
  oracle::Rows r(g.order(), 0);
  for (auto [u, v] : g.edges()) {
    auto a = g.index_of(u), b = g.index_of(v);
    r[a] |= 1u << b;
    r[b] |= 1u << a;
  }
  return r;
}

inline grim::Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  grim::Graph g(n);
  for (grim::VertexId u = 0; u < n; ++u) {
    for (grim::VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<grim::VertexId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<grim::VertexId> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = static_cast<grim::VertexId>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace testing_support
