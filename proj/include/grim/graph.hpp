#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace grim {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Finite simple undirected graph whose vertices carry stable ids.
//
// Vertex ids are kept sorted; neighbor lists are sorted as well. Ids need not
// be dense: after a vertex deletion the survivors keep their original ids.
class Graph {
 public:
  Graph() = default;

  // Vertices 0..n-1, no edges.
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return ids_.size(); }
  std::size_t size() const { return edge_count_; }
  bool empty() const { return ids_.empty(); }

  std::span<const VertexId> vertices() const { return ids_; }
  bool contains(VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::span<const VertexId> neighbors(VertexId v) const;

  // Position of v in vertices(); throws if absent.
  std::size_t index_of(VertexId v) const;

  // Edges (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

  void add_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);

  // Removes v and its incident edges. Nothing else changes.
  void remove_vertex(VertexId v);

  Graph induced(std::span<const VertexId> keep) const;

  // Relabels vertices() in order to 0..n-1.
  Graph densified() const;

  // Relabels each vertex v to mapping[index_of(v)]. The mapping must be
  // injective.
  Graph relabeled(std::span<const VertexId> mapping) const;

  bool operator==(const Graph& other) const = default;

 private:
  std::size_t checked_index(VertexId v) const;

  std::vector<VertexId> ids_;
  std::vector<std::vector<VertexId>> adj_;
  std::size_t edge_count_ = 0;
};

std::string to_string(const Graph& g);

}  // namespace grim
