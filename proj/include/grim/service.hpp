#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>

#include "json.hpp"

#include "grim/session.hpp"
#include "grim/solver.hpp"

namespace httplib {
class Server;
}

namespace grim {

struct ServiceOptions {
  std::chrono::seconds session_ttl{3600};
  SolverOptions solver;
  std::function<std::chrono::steady_clock::time_point()> clock =
      [] { return std::chrono::steady_clock::now(); };
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

// Transport-independent game service. Each handler takes the parsed request
// and returns status plus JSON body; `mount` wires them to HTTP routes.
//
// Requests to one session are serialized by that session's mutex; distinct
// sessions proceed independently. The solver memo is shared.
class GameService {
 public:
  explicit GameService(ServiceOptions options = {});

  Response create_game(const std::string& body);                  // POST /v1/games
  Response get_game(const std::string& id);                       // GET  /v1/games/{id}
  Response move(const std::string& id, const std::string& body);  // POST /v1/games/{id}/moves
  Response engine_move(const std::string& id);                    // POST /v1/games/{id}/engine-move
  Response analysis(const std::string& id);                       // GET  /v1/games/{id}/analysis
  Response export_game(const std::string& id);                    // GET  /v1/games/{id}/export
  Response analyze_position(const std::string& body);             // POST /v1/analyze
  Response random_analysis(const std::string& body);              // POST /v1/random

  std::size_t session_count();

 private:
  struct Slot {
    std::mutex mutex;
    GameSession session;
    std::chrono::steady_clock::time_point last_access;
  };

  std::shared_ptr<Slot> lookup(const std::string& id);
  void evict_expired();
  std::string new_id();

  ServiceOptions options_;
  Solver solver_;
  std::mutex store_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  std::mt19937_64 id_rng_;
};

nlohmann::json state_json(const GameSession& s);
nlohmann::json analysis_json(const Analysis& a);

// Registers the /v1 routes, plus static files from `static_dir` if nonempty.
void mount(httplib::Server& server, GameService& service,
           const std::string& static_dir = {});

}  // namespace grim
