#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grim/graph.hpp"

namespace grim {

// Removes every isolated vertex. Idempotent.
Graph normalize(Graph g);

// Every present vertex is a legal move.
std::vector<VertexId> legal_moves(const Graph& g);

// Deletes `vertex` with its edges, then every vertex left isolated. Throws
// GraphError if the vertex is absent.
Graph follower(const Graph& g, VertexId vertex);

// A graph whose vertices must be selected weight-many times before they are
// deleted. weights[i] belongs to graph.vertices()[i].
struct WeightedGraph {
  Graph graph;
  std::vector<std::uint32_t> weights;

  std::uint32_t weight_of(VertexId v) const { return weights[graph.index_of(v)]; }
  bool operator==(const WeightedGraph&) const = default;
};

// Validates that the weights line up with the vertices and are all >= 1.
WeightedGraph make_weighted(Graph g, std::vector<std::uint32_t> weights);

WeightedGraph normalize(const WeightedGraph& wg);

std::vector<VertexId> weighted_moves(const WeightedGraph& wg);

// One selection of `vertex`. Its weight drops by one; at zero the vertex is
// deleted, and every vertex isolated by that deletion goes with it whatever
// its remaining weight.
WeightedGraph weighted_follower(const WeightedGraph& wg, VertexId vertex);

// Replaces each weight-t vertex by t mutually non-adjacent copies sharing its
// neighborhood. Copies of the i-th vertex get consecutive dense ids, in
// vertex order.
Graph blowup(const WeightedGraph& wg);

// "wg:<graph6>;<w0>,<w1>,..."
WeightedGraph parse_weighted(std::string_view text);
std::string emit_weighted(const WeightedGraph& wg);

}  // namespace grim
