#include "grim/session.hpp"

#include "grim/engine.hpp"
#include "grim/family.hpp"
#include "grim/graph6.hpp"

namespace grim {

std::optional<int> GameSession::winner() const {
  if (!finished()) return std::nullopt;
  if (history.empty()) return 3 - starting_player;
  return history.back().player;
}

Graph parse_position(std::string_view text) {
  try {
    return make_family(text);
  } catch (const SpecError& spec_error) {
    try {
      return parse_graph6(text);
    } catch (const Graph6Error&) {
      throw spec_error;
    }
  }
}

GameSession create_game(std::string_view spec_or_g6, int starting_player) {
  if (starting_player != 1 && starting_player != 2) {
    throw std::invalid_argument("starting_player must be 1 or 2");
  }
  GameSession s;
  s.initial = normalize(parse_position(spec_or_g6));
  s.current = s.initial;
  s.starting_player = starting_player;
  s.to_move = starting_player;
  return s;
}

void human_move(GameSession& session, VertexId vertex) {
  if (session.finished()) {
    throw MoveError(MoveError::Kind::GameFinished, "game is already finished");
  }
  if (!session.current.contains(vertex)) {
    throw MoveError(MoveError::Kind::AbsentVertex,
                    "vertex " + std::to_string(vertex) + " is not on the board");
  }
  session.current = follower(session.current, vertex);
  session.history.push_back({session.to_move, vertex, session.current.order()});
  session.to_move = 3 - session.to_move;
}

VertexId engine_move(GameSession& session, Solver& solver) {
  if (session.finished()) {
    throw MoveError(MoveError::Kind::GameFinished, "game is already finished");
  }
  VertexId v = *solver.best_move(session.current);
  human_move(session, v);
  return v;
}

Analysis analyze(const Graph& position, Solver& solver) {
  Analysis a;
  try {
    a.sg = solver.sg_value(position);
    a.outcome = outcome_of(a.sg);
    a.winning_moves = solver.winning_moves(position);
    a.available = true;
  } catch (const CapExceeded& e) {
    a.available = false;
    a.reason = e.what();
  }
  return a;
}

Graph replay(const GameSession& session) {
  Graph g = session.initial;
  for (const auto& h : session.history) g = follower(g, h.vertex);
  return g;
}

}  // namespace grim
