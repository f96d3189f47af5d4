#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "grim/graph.hpp"
#include "grim/solver.hpp"

namespace grim {

class MoveError : public std::runtime_error {
 public:
  enum class Kind { AbsentVertex, GameFinished };
  MoveError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct HistoryEntry {
  int player;
  VertexId vertex;
  std::size_t remaining;  // vertex count after the move
};

// One game of Grim between players 1 and 2. Vertex ids are those of the
// starting graph and never change.
struct GameSession {
  std::string id;
  Graph initial;  // normalized
  Graph current;
  int starting_player = 1;
  int to_move = 1;
  std::vector<HistoryEntry> history;

  bool finished() const { return current.empty(); }
  // The player who made the last move. A game that starts empty is won by
  // the player who did not have to move.
  std::optional<int> winner() const;
};

// Accepts a family spec ("wheel:7", "g6:...") or bare graph6 text. Throws
// SpecError when neither parses, std::invalid_argument for a bad player.
Graph parse_position(std::string_view text);

GameSession create_game(std::string_view spec_or_g6, int starting_player = 1);

// Throws MoveError; the session is unchanged on error.
void human_move(GameSession& session, VertexId vertex);

// Plays Solver::best_move and returns the chosen vertex.
VertexId engine_move(GameSession& session, Solver& solver);

struct Analysis {
  bool available = false;
  std::string reason;  // why not, when unavailable
  Outcome outcome = Outcome::P;
  SGValue sg = 0;
  std::vector<VertexId> winning_moves;
};

Analysis analyze(const Graph& position, Solver& solver);
inline Analysis analyze(const GameSession& s, Solver& solver) {
  return analyze(s.current, solver);
}

// Re-applies the history to the initial graph.
Graph replay(const GameSession& session);

}  // namespace grim
