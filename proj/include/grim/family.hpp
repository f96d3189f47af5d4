#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "grim/graph.hpp"

namespace grim {

class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Named families. All results have dense ids 0..n-1.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
// Rim 0..n-2 in cyclic order, hub n-1.
Graph wheel_graph(std::size_t n);
Graph complete_graph(std::size_t n);
// K_{1,n}: hub 0, leaves 1..n.
Graph star_graph(std::size_t n);
// Parts are laid out consecutively in the given order.
Graph complete_multipartite(std::span<const std::size_t> parts);

// Disjoint union. g's vertices become 0..|g|-1 (in id order), h's follow.
Graph disjoint_union(const Graph& g, const Graph& h);

// Same layout as disjoint_union, plus every g-h cross edge.
Graph join(const Graph& g, const Graph& h);

// Vertex (i, j), with i the position of a vertex in g.vertices() and j the
// position in h.vertices(), becomes id i * |h| + j.
Graph cartesian_product(const Graph& g, const Graph& h);

// Connected components with original ids, ordered by smallest id.
std::vector<Graph> components(const Graph& g);

// Vertex sets of the components, same order as components().
std::vector<std::vector<VertexId>> component_vertex_sets(const Graph& g);

bool is_connected(const Graph& g);

// Parses a family descriptor, e.g. "join(cycle:4,complete:1)" or "g6:Bw".
// Grammar is strict: no whitespace, nesting depth at most 8.
Graph make_family(std::string_view spec);

// Recognizes a top-level "kpartite:", "complete:" or "star:" descriptor and
// returns its part sizes; empty if the spec is some other form.
std::vector<std::size_t> multipartite_parts(std::string_view spec);

}  // namespace grim
