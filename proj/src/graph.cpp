#include "grim/graph.hpp"

#include <algorithm>
#include <sstream>

namespace grim {

Graph::Graph(std::size_t n) : ids_(n), adj_(n) {
  for (std::size_t i = 0; i < n; ++i) ids_[i] = static_cast<VertexId>(i);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

bool Graph::contains(VertexId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::size_t Graph::index_of(VertexId v) const { return checked_index(v); }

std::size_t Graph::checked_index(VertexId v) const {
  if (v < ids_.size() && ids_[v] == v) return v;
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) {
    throw GraphError("vertex " + std::to_string(v) + " not in graph");
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  const auto& nb = adj_[checked_index(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::degree(VertexId v) const {
  return adj_[checked_index(v)].size();
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  return adj_[checked_index(v)];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId w : adj_[i]) {
      if (ids_[i] < w) out.emplace_back(ids_[i], w);
    }
  }
  return out;
}

void Graph::add_vertex(VertexId v) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it != ids_.end() && *it == v) {
    throw GraphError("duplicate vertex " + std::to_string(v));
  }
  auto pos = it - ids_.begin();
  ids_.insert(it, v);
  adj_.insert(adj_.begin() + pos, std::vector<VertexId>{});
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw GraphError("self-loop at " + std::to_string(u));
  auto& nu = adj_[checked_index(u)];
  auto& nv = adj_[checked_index(v)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return;
  nu.insert(it, v);
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++edge_count_;
}

void Graph::remove_vertex(VertexId v) {
  std::size_t i = checked_index(v);
  for (VertexId w : adj_[i]) {
    auto& nw = adj_[checked_index(w)];
    nw.erase(std::lower_bound(nw.begin(), nw.end(), v));
  }
  edge_count_ -= adj_[i].size();
  ids_.erase(ids_.begin() + static_cast<std::ptrdiff_t>(i));
  adj_.erase(adj_.begin() + static_cast<std::ptrdiff_t>(i));
}

Graph Graph::induced(std::span<const VertexId> keep) const {
  Graph out;
  std::vector<VertexId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.ids_ = sorted;
  out.adj_.resize(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (VertexId w : adj_[checked_index(sorted[i])]) {
      if (std::binary_search(sorted.begin(), sorted.end(), w)) {
        out.adj_[i].push_back(w);
      }
    }
    out.edge_count_ += out.adj_[i].size();
  }
  out.edge_count_ /= 2;
  return out;
}

Graph Graph::densified() const {
  std::vector<VertexId> mapping(ids_.size());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    mapping[i] = static_cast<VertexId>(i);
  }
  return relabeled(mapping);
}

Graph Graph::relabeled(std::span<const VertexId> mapping) const {
  if (mapping.size() != ids_.size()) {
    throw GraphError("relabel mapping has wrong length");
  }
  Graph out;
  for (VertexId v : mapping) out.add_vertex(v);
  for (const auto& [u, v] : edges()) {
    out.add_edge(mapping[checked_index(u)], mapping[checked_index(v)]);
  }
  return out;
}

std::string to_string(const Graph& g) {
  std::ostringstream os;
  os << "Graph(n=" << g.order() << ", m=" << g.size() << "; ";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    if (!first) os << ' ';
    os << u << '-' << v;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace grim
