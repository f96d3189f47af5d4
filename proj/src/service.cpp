#include "grim/service.hpp"

#include <limits>

#include "httplib.h"

#include "grim/family.hpp"
#include "grim/graph6.hpp"
#include "grim/random_analysis.hpp"

namespace grim {

using nlohmann::json;

namespace {

Response error(int status, const std::string& message) {
  return {status, json{{"error", message}}};
}

json vertices_json(const Graph& g) {
  json out = json::array();
  for (VertexId v : g.vertices()) out.push_back(json{{"id", v}});
  return out;
}

json edges_json(const Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back(json::array({u, v}));
  return out;
}

std::optional<json> parse_body(const std::string& body) {
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return std::nullopt;
  return j;
}

constexpr std::size_t kMaxServiceTrials = 1'000'000;
constexpr std::size_t kMaxServiceOrder = 62;
constexpr std::size_t kMaxGameOrder = 256;

}  // namespace

json state_json(const GameSession& s) {
  json j{{"id", s.id},
         {"vertices", vertices_json(s.current)},
         {"edges", edges_json(s.current)},
         {"to_move", s.to_move},
         {"status", s.finished() ? "finished" : "in-progress"},
         {"moves_played", s.history.size()}};
  if (auto w = s.winner()) j["winner"] = *w;
  else j["winner"] = nullptr;
  return j;
}

json analysis_json(const Analysis& a) {
  return json{{"outcome", to_string(a.outcome)},
              {"sg", a.sg},
              {"winning_moves", a.winning_moves}};
}

GameService::GameService(ServiceOptions options)
    : options_(std::move(options)), solver_(options_.solver), id_rng_(std::random_device{}()) {}

std::string GameService::new_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string id;
  std::uint64_t bits = id_rng_();
  for (int i = 0; i < 16; ++i, bits >>= 4) id.push_back(kHex[bits & 15]);
  return id;
}

void GameService::evict_expired() {
  const auto now = options_.clock();
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock slot_lock(it->second->mutex, std::try_to_lock);
    if (slot_lock.owns_lock() && now - it->second->last_access > options_.session_ttl) {
      slot_lock.unlock();
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

std::shared_ptr<GameService::Slot> GameService::lookup(const std::string& id) {
  std::lock_guard lock(store_mutex_);
  evict_expired();
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  return it->second;
}

std::size_t GameService::session_count() {
  std::lock_guard lock(store_mutex_);
  evict_expired();
  return sessions_.size();
}

Response GameService::create_game(const std::string& body) {
  auto req = parse_body(body);
  if (!req || !req->contains("spec") || !(*req)["spec"].is_string()) {
    return error(400, "expected JSON object with string field 'spec'");
  }
  int starting = 1;
  if (req->contains("starting_player")) {
    const json& sp = (*req)["starting_player"];
    if (!sp.is_number_integer()) return error(400, "starting_player must be 1 or 2");
    starting = sp.get<int>();
  }
  auto slot = std::make_shared<Slot>();
  try {
    slot->session = grim::create_game((*req)["spec"].get<std::string>(), starting);
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }
  if (slot->session.initial.order() > kMaxGameOrder) {
    return error(400, "games are limited to " + std::to_string(kMaxGameOrder) + " vertices");
  }
  slot->last_access = options_.clock();
  {
    std::lock_guard lock(store_mutex_);
    evict_expired();
    do {
      slot->session.id = new_id();
    } while (sessions_.contains(slot->session.id));
    sessions_.emplace(slot->session.id, slot);
  }
  return {201, state_json(slot->session)};
}

Response GameService::get_game(const std::string& id) {
  auto slot = lookup(id);
  if (!slot) return error(404, "unknown game " + id);
  std::lock_guard lock(slot->mutex);
  slot->last_access = options_.clock();
  return {200, state_json(slot->session)};
}

Response GameService::move(const std::string& id, const std::string& body) {
  auto req = parse_body(body);
  if (!req || !req->contains("vertex") || !(*req)["vertex"].is_number_integer()) {
    return error(400, "expected JSON object with integer field 'vertex'");
  }
  const auto vertex = (*req)["vertex"].get<long long>();
  auto slot = lookup(id);
  if (!slot) return error(404, "unknown game " + id);
  std::lock_guard lock(slot->mutex);
  slot->last_access = options_.clock();
  if (slot->session.finished()) return error(409, "game is finished");
  if (vertex < 0 || vertex > std::numeric_limits<VertexId>::max()) {
    return error(404, "vertex " + std::to_string(vertex) + " is not on the board");
  }
  try {
    human_move(slot->session, static_cast<VertexId>(vertex));
  } catch (const MoveError& e) {
    return error(e.kind() == MoveError::Kind::GameFinished ? 409 : 404, e.what());
  }
  return {200, state_json(slot->session)};
}

Response GameService::engine_move(const std::string& id) {
  auto slot = lookup(id);
  if (!slot) return error(404, "unknown game " + id);
  std::lock_guard lock(slot->mutex);
  slot->last_access = options_.clock();
  if (slot->session.finished()) return error(409, "game is finished");
  VertexId chosen = 0;
  try {
    chosen = grim::engine_move(slot->session, solver_);
  } catch (const CapExceeded& e) {
    return error(422, e.what());
  }
  json out = state_json(slot->session);
  out["vertex"] = chosen;
  return {200, out};
}

Response GameService::analysis(const std::string& id) {
  auto slot = lookup(id);
  if (!slot) return error(404, "unknown game " + id);
  std::lock_guard lock(slot->mutex);
  slot->last_access = options_.clock();
  Analysis a = analyze(slot->session, solver_);
  if (!a.available) return error(422, a.reason);
  return {200, analysis_json(a)};
}

Response GameService::export_game(const std::string& id) {
  auto slot = lookup(id);
  if (!slot) return error(404, "unknown game " + id);
  std::lock_guard lock(slot->mutex);
  slot->last_access = options_.clock();
  const GameSession& s = slot->session;
  json history = json::array();
  for (const auto& h : s.history) {
    history.push_back(json{{"player", h.player}, {"vertex", h.vertex}, {"remaining", h.remaining}});
  }
  json out = state_json(s);
  out["initial"] = json{{"vertices", vertices_json(s.initial)}, {"edges", edges_json(s.initial)}};
  if (s.initial.order() <= kGraph6MaxOrder) out["initial"]["g6"] = emit_graph6(s.initial);
  out["starting_player"] = s.starting_player;
  out["history"] = std::move(history);
  return {200, out};
}

Response GameService::analyze_position(const std::string& body) {
  auto req = parse_body(body);
  if (!req || !req->contains("spec") || !(*req)["spec"].is_string()) {
    return error(400, "expected JSON object with string field 'spec'");
  }
  Graph g;
  try {
    g = normalize(parse_position((*req)["spec"].get<std::string>()));
  } catch (const std::invalid_argument& e) {
    return error(400, e.what());
  }
  Analysis a = analyze(g, solver_);
  if (!a.available) return error(422, a.reason);
  json out = analysis_json(a);
  out["vertices"] = vertices_json(g);
  out["edges"] = edges_json(g);
  return {200, out};
}

Response GameService::random_analysis(const std::string& body) {
  auto req = parse_body(body);
  if (!req || !req->contains("n") || !(*req)["n"].is_number_unsigned()) {
    return error(400, "expected JSON object with nonnegative integer field 'n'");
  }
  const auto n = (*req)["n"].get<std::size_t>();
  try {
    if (req->contains("p")) {
      const double p = (*req)["p"].get<double>();
      const auto trials = req->value("trials", std::size_t{10000});
      const auto seed = req->value("seed", std::uint64_t{1});
      if (trials > kMaxServiceTrials) return error(400, "at most 1000000 trials per request");
      if (n > kMaxServiceOrder) return error(422, "n too large for sampling");
      auto est = monte_carlo(n, p, trials, seed, solver_);
      return {200, json{{"n", n}, {"p", p}, {"trials", trials}, {"seed", seed},
                        {"w2_estimate", est.estimate}, {"std_error", est.std_error}}};
    }
    auto hist = exact_histogram(n, solver_);
    json out{{"n", n},
             {"p_counts", hist.p_counts},
             {"total_counts", hist.total_counts},
             {"w2_polynomial", polynomial_string(hist)}};
    if (req->value("crossings", false)) out["roots"] = crossings(hist, 1e-12).roots;
    return {200, out};
  } catch (const CapExceeded& e) {
    return error(422, e.what());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
}

void mount(httplib::Server& server, GameService& service, const std::string& static_dir) {
  auto reply = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  server.Post("/v1/games", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.create_game(req.body));
  });
  server.Get(R"(/v1/games/([0-9a-f]+))",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.get_game(req.matches[1]));
             });
  server.Post(R"(/v1/games/([0-9a-f]+)/moves)",
              [&service, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, service.move(req.matches[1], req.body));
              });
  server.Post(R"(/v1/games/([0-9a-f]+)/engine-move)",
              [&service, reply](const httplib::Request& req, httplib::Response& res) {
                reply(res, service.engine_move(req.matches[1]));
              });
  server.Get(R"(/v1/games/([0-9a-f]+)/analysis)",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.analysis(req.matches[1]));
             });
  server.Get(R"(/v1/games/([0-9a-f]+)/export)",
             [&service, reply](const httplib::Request& req, httplib::Response& res) {
               reply(res, service.export_game(req.matches[1]));
             });
  server.Post("/v1/analyze", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.analyze_position(req.body));
  });
  server.Post("/v1/random", [&service, reply](const httplib::Request& req, httplib::Response& res) {
    reply(res, service.random_analysis(req.body));
  });
  if (!static_dir.empty()) server.set_mount_point("/", static_dir);
}

}  // namespace grim
