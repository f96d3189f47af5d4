#include "grim/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "grim/graph6.hpp"

namespace grim {

namespace {

using Row = std::uint64_t;
using Cell = std::vector<int>;
using Partition = std::vector<Cell>;

// Individualization-refinement search for the labeling whose permuted
// adjacency matrix, read row by row, is lexicographically least. Children of
// a search node that lie in one orbit of the automorphisms found so far
// (restricted to those fixing the node's individualized vertices) lead to
// identical leaf sets, so only one of them is expanded.
class LabelingSearch {
 public:
  explicit LabelingSearch(std::vector<Row> adj) : adj_(std::move(adj)), n_(adj_.size()) {}

  std::vector<int> run(Partition start) {
    std::vector<int> prefix;
    descend(std::move(start), prefix);
    return best_perm_;
  }

  const std::vector<Row>& best_rows() const { return best_rows_; }

 private:
  void refine(Partition& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        Row splitter = 0;
        for (int v : cells[s]) splitter |= Row{1} << v;
        Partition next;
        next.reserve(cells.size() + 4);
        for (const Cell& cell : cells) {
          if (cell.size() == 1) {
            next.push_back(cell);
            continue;
          }
          std::vector<std::pair<int, int>> keyed;
          keyed.reserve(cell.size());
          for (int v : cell) keyed.emplace_back(std::popcount(adj_[v] & splitter), v);
          std::sort(keyed.begin(), keyed.end());
          std::size_t i = 0;
          while (i < keyed.size()) {
            Cell part;
            std::size_t j = i;
            while (j < keyed.size() && keyed[j].first == keyed[i].first) {
              part.push_back(keyed[j].second);
              ++j;
            }
            if (part.size() != cell.size()) changed = true;
            next.push_back(std::move(part));
            i = j;
          }
        }
        cells = std::move(next);
      }
    }
  }

  std::vector<Row> permuted_rows(const std::vector<int>& perm) const {
    std::vector<int> pos(n_);
    for (std::size_t p = 0; p < n_; ++p) pos[perm[p]] = static_cast<int>(p);
    std::vector<Row> rows(n_, 0);
    for (std::size_t p = 0; p < n_; ++p) {
      Row bits = adj_[perm[p]];
      while (bits) {
        int w = std::countr_zero(bits);
        bits &= bits - 1;
        rows[p] |= Row{1} << (n_ - 1 - static_cast<std::size_t>(pos[w]));
      }
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& from,
                           const std::vector<int>& to) {
    std::vector<int> gamma(n_);
    for (std::size_t p = 0; p < n_; ++p) gamma[from[p]] = to[p];
    bool identity = true;
    for (std::size_t v = 0; v < n_; ++v) identity &= gamma[v] == static_cast<int>(v);
    if (!identity) automorphisms_.push_back(std::move(gamma));
  }

  void leaf(const Partition& cells) {
    std::vector<int> perm;
    perm.reserve(n_);
    for (const Cell& c : cells) perm.push_back(c.front());
    std::vector<Row> rows = permuted_rows(perm);
    if (first_perm_.empty()) {
      first_perm_ = perm;
      first_rows_ = rows;
      best_perm_ = perm;
      best_rows_ = rows;
      return;
    }
    if (rows == first_rows_) {
      record_automorphism(perm, first_perm_);
    } else if (rows == best_rows_) {
      record_automorphism(perm, best_perm_);
    }
    if (rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_perm_ = std::move(perm);
    }
  }

  static int find(std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  void descend(Partition cells, std::vector<int>& prefix) {
    refine(cells);
    auto target = std::find_if(cells.begin(), cells.end(),
                               [](const Cell& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t target_index = static_cast<std::size_t>(target - cells.begin());
    Cell choices = *target;
    std::sort(choices.begin(), choices.end());
    std::vector<int> expanded;
    for (int v : choices) {
      if (!expanded.empty() && same_orbit_as_expanded(v, expanded, prefix)) continue;
      expanded.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target_index) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back(Cell{v});
        Cell rest;
        for (int w : cells[i]) if (w != v) rest.push_back(w);
        child.push_back(std::move(rest));
      }
      prefix.push_back(v);
      descend(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  bool same_orbit_as_expanded(int v, const std::vector<int>& expanded,
                              const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int u) { return gamma[u] == u; });
      if (!fixes) continue;
      for (std::size_t x = 0; x < n_; ++x) {
        int a = find(parent, static_cast<int>(x));
        int b = find(parent, gamma[x]);
        if (a != b) parent[a] = b;
      }
    }
    int root = find(parent, v);
    return std::any_of(expanded.begin(), expanded.end(),
                       [&](int u) { return find(parent, u) == root; });
  }

  std::vector<Row> adj_;
  std::size_t n_;
  std::vector<int> first_perm_;
  std::vector<Row> first_rows_;
  std::vector<int> best_perm_;
  std::vector<Row> best_rows_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g,
                                     std::span<const std::uint32_t> colors,
                                     std::size_t cap) {
  const std::size_t n = g.order();
  if (n > std::min(cap, kGraph6MaxOrder)) {
    throw CapExceeded("canonical form", n, std::min(cap, kGraph6MaxOrder));
  }
  if (!colors.empty() && colors.size() != n) {
    throw GraphError("canonical form: color count does not match vertex count");
  }
  CanonicalLabeling out;
  if (n == 0) {
    out.key.bytes = colors.empty() ? "?" : "?|";
    return out;
  }

  std::vector<Row> adj(n, 0);
  auto ids = g.vertices();
  for (std::size_t i = 0; i < n; ++i) {
    for (VertexId w : g.neighbors(ids[i])) adj[i] |= Row{1} << g.index_of(w);
  }

  Partition start;
  if (colors.empty()) {
    start.emplace_back(n);
    std::iota(start[0].begin(), start[0].end(), 0);
  } else {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int a, int b) { return colors[a] < colors[b]; });
    for (std::size_t i = 0; i < n; ++i) {
      if (i == 0 || colors[idx[i]] != colors[idx[i - 1]]) start.emplace_back();
      start.back().push_back(idx[i]);
    }
  }

  LabelingSearch search(adj);
  std::vector<int> perm = search.run(std::move(start));
  out.order.assign(perm.begin(), perm.end());

  const auto& rows = search.best_rows();
  Graph canon(n);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      if ((rows[p] >> (n - 1 - q)) & 1) {
        canon.add_edge(static_cast<VertexId>(p), static_cast<VertexId>(q));
      }
    }
  }
  out.key.bytes = emit_graph6(canon);
  if (!colors.empty()) {
    out.key.bytes.push_back('|');
    for (std::size_t p = 0; p < n; ++p) {
      if (p) out.key.bytes.push_back(',');
      out.key.bytes += std::to_string(colors[perm[p]]);
    }
  }
  return out;
}

CanonicalKey canonical_form(const Graph& g, std::size_t cap) {
  return canonical_labeling(g, {}, cap).key;
}

CanonicalKey canonical_form(const Graph& g,
                            std::span<const std::uint32_t> colors,
                            std::size_t cap) {
  return canonical_labeling(g, colors, cap).key;
}

}  // namespace grim
