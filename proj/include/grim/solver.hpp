#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "grim/canonical.hpp"
#include "grim/engine.hpp"
#include "grim/graph.hpp"

namespace grim {

using SGValue = std::uint32_t;

enum class Outcome { N, P };

inline Outcome outcome_of(SGValue v) { return v == 0 ? Outcome::P : Outcome::N; }
inline const char* to_string(Outcome o) { return o == Outcome::N ? "N" : "P"; }

// Smallest nonnegative integer not in `values`.
SGValue mex(std::vector<SGValue> values);

struct SolverOptions {
  // Largest component (or whole graph, without decomposition) evaluated
  // through canonical forms. Path and cycle components are exempt.
  std::size_t component_cap = 16;
  // Split positions into components and nim-sum their values.
  bool decompose = true;
  // Off: plain recursion with no table at all. Exponential; for cross-checks.
  bool memoize = true;
};

// Thread-safe value table. Values are deterministic functions of the key, so
// a racing double insert stores the same number twice.
class MemoTable {
 public:
  std::optional<SGValue> find(const std::string& key) const;
  void insert(const std::string& key, SGValue value);
  std::size_t size() const;
  void clear();

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, SGValue> table_;
};

// Sprague-Grundy evaluation of Grim positions. Arbitrary graphs are accepted;
// isolated vertices are removed before evaluation.
//
// Positions are split into connected components; each component is looked up
// by its canonical key ("#P<n>" for paths, "#C<n>" for cycles), and missing
// values are filled in with an explicit work stack.
class Solver {
 public:
  explicit Solver(SolverOptions options = {});

  const SolverOptions& options() const { return options_; }

  SGValue sg_value(const Graph& g);
  Outcome outcome(const Graph& g) { return outcome_of(sg_value(g)); }

  // Moves whose follower is a P position, ascending by id.
  std::vector<VertexId> winning_moves(const Graph& g);

  // Lowest-id winning move; failing that, the lowest-id move leaving the
  // opponent the largest SG value. Empty for the empty graph.
  std::optional<VertexId> best_move(const Graph& g);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  struct Piece {
    std::string key;
    Graph graph;
  };

  Piece make_piece(Graph g, bool connected) const;
  std::vector<Piece> split(Graph g) const;
  SGValue evaluate(const Piece& piece);
  SGValue evaluate_unmemoized(const Graph& g);

  SolverOptions options_;
  MemoTable memo_;
};

// Weighted Grim played directly on weighted states (no blowup).
class WeightedSolver {
 public:
  explicit WeightedSolver(std::size_t cap = kDefaultCanonicalCap) : cap_(cap) {}

  SGValue sg_value(const WeightedGraph& wg);
  Outcome outcome(const WeightedGraph& wg) { return outcome_of(sg_value(wg)); }

 private:
  std::size_t cap_;
  std::unordered_map<std::string, SGValue> memo_;
};

}  // namespace grim
