// grim: command-line front end for the Grim engine.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>

#include "CLI11.hpp"
#include "httplib.h"
#include "json.hpp"

#include "grim/engine.hpp"
#include "grim/family.hpp"
#include "grim/graph6.hpp"
#include "grim/octal6.hpp"
#include "grim/parallel.hpp"
#include "grim/random_analysis.hpp"
#include "grim/service.hpp"
#include "grim/session.hpp"
#include "grim/solver.hpp"
#include "grim/theory.hpp"

namespace {

using nlohmann::json;

std::string join_ids(const std::vector<grim::VertexId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(ids[i]);
  }
  return out;
}

struct SolveArgs {
  std::string spec;
  bool sg = false;
  bool moves = false;
  bool json = false;
  std::size_t cap = 16;
};

int run_solve(const SolveArgs& a) {
  grim::SolverOptions options;
  options.component_cap = a.cap;
  grim::Solver solver(options);

  if (a.spec.starts_with("wg:")) {
    grim::WeightedGraph wg = grim::parse_weighted(a.spec);
    grim::WeightedSolver weighted(a.cap);
    const grim::SGValue direct = weighted.sg_value(wg);
    const grim::Graph blown = grim::blowup(wg);
    const grim::SGValue via_blowup = solver.sg_value(blown);
    if (a.json) {
      std::cout << json{{"spec", a.spec},
                        {"outcome", grim::to_string(grim::outcome_of(direct))},
                        {"sg", direct},
                        {"blowup_g6", grim::emit_graph6(blown)},
                        {"blowup_outcome", grim::to_string(grim::outcome_of(via_blowup))},
                        {"blowup_sg", via_blowup}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "outcome: " << grim::to_string(grim::outcome_of(direct)) << "\n";
      if (a.sg) std::cout << "sg: " << direct << "\n";
      std::cout << "blowup: " << grim::emit_graph6(blown) << " outcome "
                << grim::to_string(grim::outcome_of(via_blowup)) << "\n";
    }
    return 0;
  }

  grim::Graph g = grim::normalize(grim::parse_position(a.spec));
  const grim::SGValue value = solver.sg_value(g);
  std::vector<grim::VertexId> winning;
  std::optional<grim::VertexId> best;
  if (a.moves || a.json) {
    winning = solver.winning_moves(g);
    best = solver.best_move(g);
  }
  std::optional<grim::Prediction> prediction;
  try {
    prediction = grim::classify_family(a.spec);
  } catch (const std::invalid_argument&) {
  }

  if (a.json) {
    json out{{"spec", a.spec},
             {"vertices", g.order()},
             {"edges", g.size()},
             {"outcome", grim::to_string(grim::outcome_of(value))},
             {"sg", value},
             {"winning_moves", winning}};
    out["best_move"] = best ? json(*best) : json(nullptr);
    if (prediction) {
      out["theory"] = json{{"outcome", grim::to_string(prediction->outcome)},
                           {"rule", prediction->rule},
                           {"witness", prediction->witness}};
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "outcome: " << grim::to_string(grim::outcome_of(value)) << "\n";
  if (a.sg) std::cout << "sg: " << value << "\n";
  if (a.moves) {
    std::cout << "winning moves: " << (winning.empty() ? "(none)" : join_ids(winning)) << "\n";
    if (best) std::cout << "best move: " << *best << "\n";
  }
  if (prediction && prediction->outcome != grim::Predicted::Unknown) {
    std::cout << "theory: " << grim::to_string(prediction->outcome) << " by "
              << prediction->rule << "\n";
  }
  return 0;
}

struct SeqArgs {
  std::string family = "octal6";
  std::size_t max = 10000;
  bool zeros = false;
  bool resume = false;
  bool quiet = false;
  std::string out;
};

int run_seq(const SeqArgs& a) {
  grim::SGSequence seq;
  const auto start = std::chrono::steady_clock::now();
  if (a.family == "octal6") {
    grim::Octal6Options options;
    if (!a.quiet) {
      options.progress = [](std::size_t n) { std::cerr << "  n = " << n << "\r" << std::flush; };
    }
    if (a.resume && !a.out.empty() && std::filesystem::exists(a.out)) {
      seq = grim::load_sequence(a.out);
    }
    grim::extend_octal6(seq, a.max, options);
    if (!a.quiet) std::cerr << "\n";
  } else if (a.family == "path") {
    grim::Solver solver;
    seq.values.assign(a.max + 1, 0);
    for (std::size_t n = 2; n <= a.max; ++n) {
      seq.values[n] = static_cast<std::uint16_t>(solver.sg_value(grim::path_graph(n)));
    }
  } else {
    std::cerr << "unknown family '" << a.family << "' (use path or octal6)\n";
    return 2;
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!a.out.empty()) grim::save_sequence(seq, a.out);
  if (a.zeros) {
    std::cout << "zeros:";
    for (std::size_t n : grim::zeros(seq)) std::cout << ' ' << n;
    std::cout << "\n";
  } else if (a.out.empty()) {
    for (std::size_t n = 1; n <= seq.max_n(); ++n) std::cout << n << ' ' << seq[n] << "\n";
  }
  std::cerr << "computed " << seq.max_n() << " values in " << seconds << " s\n";
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::size_t max_vertices = 8;
  bool json = false;
  std::size_t threads = 0;
};

int run_verify(const VerifyArgs& a) {
  std::vector<std::string> suites;
  if (a.suite == "all") suites = grim::verify_suites();
  else suites.push_back(a.suite);
  grim::VerifyOptions options;
  options.threads = a.threads ? a.threads : grim::default_threads();
  json reports = json::array();
  bool all_ok = true;
  for (const auto& s : suites) {
    grim::VerificationReport r = grim::verify(s, a.max_vertices, options);
    all_ok &= r.ok();
    if (a.json) {
      reports.push_back(json{{"suite", r.suite},
                             {"max_vertices", r.size_bound},
                             {"instances", r.instances},
                             {"passed", r.passed},
                             {"failed", r.failed},
                             {"counterexamples", r.counterexamples}});
      continue;
    }
    std::printf("%-22s %6zu/%-6zu %s\n", r.suite.c_str(), r.passed, r.instances,
                r.ok() ? "ok" : "FAIL");
    for (const auto& c : r.counterexamples) std::printf("    %s\n", c.c_str());
  }
  if (a.json) std::cout << (suites.size() == 1 ? reports[0] : reports).dump(2) << "\n";
  return all_ok ? 0 : 1;
}

struct RandomArgs {
  std::size_t n = 3;
  bool exact = false;
  bool mc = false;
  double p = 0.5;
  std::size_t trials = 100000;
  std::uint64_t seed = 1;
  bool crossings = false;
  bool json = false;
};

int run_random(const RandomArgs& a) {
  grim::Solver solver;
  json out{{"n", a.n}};
  const bool exact = a.exact || !a.mc || a.crossings;
  if (exact) {
    auto hist = grim::exact_histogram(a.n, solver, grim::default_threads());
    out["p_counts"] = hist.p_counts;
    out["total_counts"] = hist.total_counts;
    out["w2_polynomial"] = grim::polynomial_string(hist);
    if (a.n == 4) out["published_w2_polynomial"] = grim::published_n4_polynomial();
    if (a.crossings) {
      auto report = grim::crossings(hist, 1e-12);
      out["roots"] = report.roots;
      out["method"] = report.method;
    }
  }
  if (a.mc) {
    auto est = grim::monte_carlo(a.n, a.p, a.trials, a.seed, solver, grim::default_threads());
    out["monte_carlo"] = json{{"p", a.p},
                              {"trials", a.trials},
                              {"seed", a.seed},
                              {"w2_estimate", est.estimate},
                              {"std_error", est.std_error}};
  }
  if (a.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "n = " << a.n << "\n";
  if (exact) {
    std::cout << "W2(p) = " << out["w2_polynomial"].get<std::string>() << "\n";
    if (a.n == 4) {
      std::cout << "published: " << grim::published_n4_polynomial() << "\n";
    }
    if (a.crossings) {
      std::cout << "W2 = 1/2 at:";
      for (double r : out["roots"]) std::printf(" %.12f", r);
      std::cout << "\n";
    }
  }
  if (a.mc) {
    std::printf("monte carlo: W2(%.4f) ~= %.6f +/- %.6f (%zu trials, seed %llu)\n", a.p,
                out["monte_carlo"]["w2_estimate"].get<double>(),
                out["monte_carlo"]["std_error"].get<double>(), a.trials,
                static_cast<unsigned long long>(a.seed));
  }
  return 0;
}

struct ServeArgs {
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  long ttl = 3600;
};

int run_serve(const ServeArgs& a) {
  grim::ServiceOptions options;
  options.session_ttl = std::chrono::seconds(a.ttl);
  grim::GameService service(options);
  httplib::Server server;
  grim::mount(server, service, a.static_dir);
  std::cerr << "grim serving on http://" << a.host << ":" << a.port << "\n";
  return server.listen(a.host, a.port) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grim: vertex-deletion game engine and verification workbench"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Outcome, SG value and winning moves of a position");
  solve_cmd->add_option("spec", solve.spec, "family spec, g6 text, or wg:<g6>;<weights>")->required();
  solve_cmd->add_flag("--sg", solve.sg, "print the Sprague-Grundy value");
  solve_cmd->add_flag("--moves", solve.moves, "print winning moves and the engine's choice");
  solve_cmd->add_flag("--json", solve.json, "JSON output");
  solve_cmd->add_option("--cap", solve.cap, "component size cap")->capture_default_str();

  SeqArgs seq;
  auto* seq_cmd = app.add_subcommand("seq", "SG sequence of paths / Octal .6");
  seq_cmd->add_option("--family", seq.family, "path or octal6")->capture_default_str();
  seq_cmd->add_option("--max", seq.max, "largest heap size")->capture_default_str();
  seq_cmd->add_flag("--zeros", seq.zeros, "print heap sizes with SG 0");
  seq_cmd->add_option("--out", seq.out, "write the binary sequence file");
  seq_cmd->add_flag("--resume", seq.resume, "continue from the --out file if present");
  seq_cmd->add_flag("--quiet", seq.quiet, "no progress output");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed-form results against the solver");
  verify_cmd->add_option("--suite", verify.suite, "suite name or 'all'")->required();
  verify_cmd->add_option("--max-vertices", verify.max_vertices, "size bound")->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "JSON report");
  verify_cmd->add_option("--threads", verify.threads, "worker threads (0 = all cores)");

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "Win probabilities on Erdos-Renyi graphs");
  random_cmd->add_option("--n", random.n, "vertex count")->required();
  random_cmd->add_flag("--exact", random.exact, "exact enumeration (default)");
  random_cmd->add_flag("--mc", random.mc, "Monte Carlo estimate");
  random_cmd->add_option("--p", random.p, "edge probability for --mc")->capture_default_str();
  random_cmd->add_option("--trials", random.trials, "Monte Carlo trials")->capture_default_str();
  random_cmd->add_option("--seed", random.seed, "Monte Carlo seed")->capture_default_str();
  random_cmd->add_flag("--crossings", random.crossings, "solve W2(p) = 1/2");
  random_cmd->add_flag("--json", random.json, "JSON output");

  ServeArgs serve;
  auto* serve_cmd = app.add_subcommand("serve", "HTTP game service");
  serve_cmd->add_option("--port", serve.port, "TCP port")->capture_default_str();
  serve_cmd->add_option("--host", serve.host, "bind address")->capture_default_str();
  serve_cmd->add_option("--static", serve.static_dir, "directory of UI assets to serve");
  serve_cmd->add_option("--ttl", serve.ttl, "session lifetime in seconds")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*seq_cmd) return run_seq(seq);
    if (*verify_cmd) return run_verify(verify);
    if (*random_cmd) return run_random(random);
    if (*serve_cmd) return run_serve(serve);
  } catch (const std::exception& e) {
    std::cerr << "grim: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
