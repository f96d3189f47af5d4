#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "grim/graph.hpp"

namespace grim {

// Labeled graph on 0..n-1 whose edge set is the bitmask `mask` over the pairs
// (0,1), (0,2), (1,2), (0,3), ... (column order, as in graph6).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

inline std::size_t pair_count(std::size_t n) { return n * (n - (n ? 1 : 0)) / 2; }

// One representative per isomorphism class of graphs on exactly n vertices,
// ordered by canonical key. n <= 10.
std::vector<Graph> nonisomorphic_graphs(std::size_t n);

}  // namespace grim
