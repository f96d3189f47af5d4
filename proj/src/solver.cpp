#include "grim/solver.hpp"

#include <algorithm>
#include <mutex>
#include <set>

#include "grim/family.hpp"

namespace grim {

SGValue mex(std::vector<SGValue> values) {
  std::sort(values.begin(), values.end());
  SGValue m = 0;
  for (SGValue v : values) {
    if (v == m) ++m;
    else if (v > m) break;
  }
  return m;
}

std::optional<SGValue> MemoTable::find(const std::string& key) const {
  std::shared_lock lock(mutex_);
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoTable::insert(const std::string& key, SGValue value) {
  std::unique_lock lock(mutex_);
  table_.insert_or_assign(key, value);
}

std::size_t MemoTable::size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

void MemoTable::clear() {
  std::unique_lock lock(mutex_);
  table_.clear();
}

namespace {

// Lengths of the path components if g (no isolated vertices) is a disjoint
// union of paths, sorted; empty otherwise.
std::vector<std::size_t> path_lengths(const Graph& g) {
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 2) return {};
  }
  std::vector<std::size_t> lengths;
  for (const Graph& c : components(g)) {
    if (c.size() + 1 != c.order()) return {};
    lengths.push_back(c.order());
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || g.size() != g.order()) return false;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) != 2) return false;
  }
  return is_connected(g);
}

}  // namespace

Solver::Solver(SolverOptions options) : options_(options) {}

Solver::Piece Solver::make_piece(Graph g, bool connected) const {
  Piece piece;
  const bool max_degree_two = std::all_of(
      g.vertices().begin(), g.vertices().end(),
      [&](VertexId v) { return g.degree(v) <= 2; });
  if (connected && max_degree_two && g.size() + 1 == g.order()) {
    piece.key = "#P" + std::to_string(g.order());
  } else if (connected && max_degree_two && g.size() == g.order()) {
    piece.key = "#C" + std::to_string(g.order());
  } else if (auto lengths = max_degree_two ? path_lengths(g) : std::vector<std::size_t>{};
             !lengths.empty()) {
    piece.key = lengths.size() == 1 ? "#P" : "#U";
    for (std::size_t i = 0; i < lengths.size(); ++i) {
      if (i) piece.key.push_back(',');
      piece.key += std::to_string(lengths[i]);
    }
  } else if (is_cycle(g)) {
    piece.key = "#C" + std::to_string(g.order());
  } else {
    if (g.order() > options_.component_cap) {
      throw CapExceeded(options_.decompose ? "sg_value component" : "sg_value graph",
                        g.order(), options_.component_cap);
    }
    piece.key = canonical_form(g, options_.component_cap).bytes;
  }
  piece.graph = std::move(g);
  return piece;
}

std::vector<Solver::Piece> Solver::split(Graph g) const {
  std::vector<Piece> pieces;
  if (g.empty()) return pieces;
  if (!options_.decompose) {
    const bool connected = is_connected(g);
    pieces.push_back(make_piece(std::move(g), connected));
    return pieces;
  }
  auto sets = component_vertex_sets(g);
  if (sets.size() == 1) {
    pieces.push_back(make_piece(std::move(g), true));
    return pieces;
  }
  for (const auto& members : sets) pieces.push_back(make_piece(g.induced(members), true));
  return pieces;
}

SGValue Solver::evaluate(const Piece& root) {
  if (auto v = memo_.find(root.key)) return *v;

  struct Frame {
    std::string key;
    std::vector<std::vector<Piece>> followers;
    std::size_t next = 0;
    std::vector<SGValue> values;
  };
  auto make_frame = [this](const Piece& piece) {
    Frame frame{piece.key, {}, 0, {}};
    std::set<std::vector<std::string>> seen;
    for (VertexId v : piece.graph.vertices()) {
      std::vector<Piece> parts = split(follower(piece.graph, v));
      std::vector<std::string> keys;
      for (const Piece& p : parts) keys.push_back(p.key);
      std::sort(keys.begin(), keys.end());
      if (seen.insert(std::move(keys)).second) {
        frame.followers.push_back(std::move(parts));
      }
    }
    return frame;
  };

  std::vector<Frame> stack;
  stack.push_back(make_frame(root));
  while (!stack.empty()) {
    const std::size_t top = stack.size() - 1;
    bool descended = false;
    while (stack[top].next < stack[top].followers.size()) {
      SGValue nim_sum = 0;
      const Piece* missing = nullptr;
      for (const Piece& p : stack[top].followers[stack[top].next]) {
        auto v = memo_.find(p.key);
        if (!v) {
          missing = &p;
          break;
        }
        nim_sum ^= *v;
      }
      if (missing) {
        Frame child = make_frame(*missing);
        stack.push_back(std::move(child));
        descended = true;
        break;
      }
      stack[top].values.push_back(nim_sum);
      ++stack[top].next;
    }
    if (descended) continue;
    memo_.insert(stack[top].key, mex(std::move(stack[top].values)));
    stack.pop_back();
  }
  return *memo_.find(root.key);
}

SGValue Solver::evaluate_unmemoized(const Graph& g) {
  if (g.empty()) return 0;
  if (options_.decompose) {
    auto parts = components(g);
    if (parts.size() > 1) {
      SGValue nim_sum = 0;
      for (const Graph& c : parts) nim_sum ^= evaluate_unmemoized(c);
      return nim_sum;
    }
  }
  std::vector<SGValue> values;
  for (VertexId v : g.vertices()) {
    values.push_back(evaluate_unmemoized(follower(g, v)));
  }
  return mex(std::move(values));
}

SGValue Solver::sg_value(const Graph& g) {
  Graph position = normalize(g);
  if (!options_.memoize) return evaluate_unmemoized(position);
  SGValue nim_sum = 0;
  for (const Piece& p : split(position)) nim_sum ^= evaluate(p);
  return nim_sum;
}

std::vector<VertexId> Solver::winning_moves(const Graph& g) {
  Graph position = normalize(g);
  std::vector<VertexId> out;
  for (VertexId v : position.vertices()) {
    if (sg_value(follower(position, v)) == 0) out.push_back(v);
  }
  return out;
}

std::optional<VertexId> Solver::best_move(const Graph& g) {
  Graph position = normalize(g);
  std::optional<VertexId> best;
  SGValue best_value = 0;
  for (VertexId v : position.vertices()) {
    SGValue value = sg_value(follower(position, v));
    if (value == 0) return v;
    if (!best || value > best_value) {
      best = v;
      best_value = value;
    }
  }
  return best;
}

SGValue WeightedSolver::sg_value(const WeightedGraph& input) {
  WeightedGraph wg = normalize(input);
  if (wg.graph.empty()) return 0;
  std::string key = canonical_form(wg.graph, wg.weights, cap_).bytes;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  std::vector<SGValue> values;
  for (VertexId v : weighted_moves(wg)) {
    values.push_back(sg_value(weighted_follower(wg, v)));
  }
  SGValue value = mex(std::move(values));
  memo_.emplace(std::move(key), value);
  return value;
}

}  // namespace grim
