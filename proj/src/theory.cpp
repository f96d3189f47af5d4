#include "grim/theory.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "grim/canonical.hpp"
#include "grim/engine.hpp"
#include "grim/enumerate.hpp"
#include "grim/family.hpp"
#include "grim/parallel.hpp"

namespace grim {

const char* to_string(Predicted p) {
  switch (p) {
    case Predicted::N: return "N";
    case Predicted::P: return "P";
    default: return "Unknown";
  }
}

std::string describe_parts(std::span<const std::size_t> parts) {
  std::string out = "K_{";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(parts[i]);
  }
  return out + "}";
}

namespace {

constexpr std::size_t kPathZeros[] = {4, 12, 20, 30, 46, 72, 98, 124, 150, 176, 314, 408};
constexpr std::size_t kKnownZerosLimit = 10'000'000;

Prediction predict(bool next_wins, std::string rule, std::string witness_n = {},
                   std::string witness_p = {}) {
  Prediction p;
  p.outcome = next_wins ? Predicted::N : Predicted::P;
  p.rule = std::move(rule);
  p.witness = next_wins ? std::move(witness_n) : std::move(witness_p);
  return p;
}

Prediction unknown(std::string rule) {
  Prediction p;
  p.rule = std::move(rule);
  return p;
}

}  // namespace

std::span<const std::size_t> known_path_zeros() { return kPathZeros; }

Prediction classify_multipartite(std::vector<std::size_t> parts) {
  if (parts.empty()) throw std::invalid_argument("classify_multipartite: no parts");
  if (std::find(parts.begin(), parts.end(), 0) != parts.end()) {
    throw std::invalid_argument("classify_multipartite: nonpositive part");
  }
  std::sort(parts.begin(), parts.end());
  const std::size_t t = parts.size();
  const std::size_t total = std::accumulate(parts.begin(), parts.end(), std::size_t{0});
  const auto k = static_cast<std::size_t>(std::count(parts.begin(), parts.end(), 1));
  const bool even_total = total % 2 == 0;

  if (t == 1) return predict(false, "edgeless", {}, "no move: every vertex is isolated");
  if (k == t) {
    return predict(t % 2 == 0, "complete", "any vertex",
                   "every move leaves a smaller complete graph");
  }
  if (t == 2 && k == 1) return predict(true, "star", "delete the hub");
  if (t == 2) {
    return predict(!even_total, "bipartite",
                   "delete from a part with more than 2 vertices",
                   "mirror the opponent");
  }
  if (t == 3 && k == 2) {
    return predict(parts[2] % 2 == 0, "k11n", "delete from the large part, leaving K_{1,1,n-1}",
                   "answer K_{1,1,n-1} by deleting from the large part");
  }
  if (t == 3 && k == 1 && parts[1] == 2) {
    return predict(true, "k12n",
                   parts[2] % 2 == 0 ? "delete the singleton, leaving K_{2,n}"
                                     : "delete from the 2-part, leaving K_{1,1,n}");
  }
  if (t == 3 && k == 1) {
    return predict((parts[1] + parts[2]) % 2 == 0, "k1mn",
                   "delete from a part, keeping both large parts >= 3",
                   "keep the opponent off K_{1,2,n}");
  }
  if (k == 0) {
    return predict(!even_total, "no-singletons", "delete a vertex of an odd part",
                   "reply in the same part, or in another odd part");
  }
  if (k == 1) {
    const bool all_large = std::all_of(parts.begin() + 1, parts.end(),
                                       [](std::size_t p) { return p > 2; });
    const bool p_position = even_total && all_large;
    return predict(!p_position, "one-singleton",
                   !even_total ? "delete the singleton"
                               : "delete from the first part larger than 2",
                   "never leave the singleton as the only odd move");
  }
  std::size_t alpha = 0;
  for (std::size_t p : parts) alpha += p - 1;
  if (k > 1 && k > alpha) {
    return predict(k % 2 == alpha % 2, "singleton-parity");
  }
  if (t == 4 && k == 2 && parts[2] == 3 && parts[3] >= 3) {
    return predict(true, "k113n",
                   parts[3] % 2 == 0 ? "delete a singleton, leaving K_{1,3,n}"
                                     : "delete from the 3-part, leaving K_{1,1,2,n}");
  }
  return unknown("open");
}

namespace {

std::optional<std::size_t> parse_size_after(std::string_view spec,
                                            std::string_view prefix) {
  if (!spec.starts_with(prefix)) return std::nullopt;
  std::string_view rest = spec.substr(prefix.size());
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc{} || ptr != rest.data() + rest.size()) {
    throw SpecError("bad size in '" + std::string(spec) + "'");
  }
  return n;
}

// Outcome of path:n from theory plus whatever sequence data is available.
Prediction classify_path(std::size_t n, const SGSequence* sequence) {
  if (n == 0) throw SpecError("path needs size >= 1");
  if (n == 1) return predict(false, "edgeless");
  if (n == 2) return predict(true, "complete", "any vertex");
  if (n % 2 == 1) return predict(true, "odd-path-reflection", "delete the middle vertex");
  if (std::binary_search(std::begin(kPathZeros), std::end(kPathZeros), n)) {
    return predict(false, "path-zero-list", {}, "second player wins");
  }
  if (sequence && sequence->max_n() >= n) {
    return predict((*sequence)[n] != 0, "octal6-sequence", "move to an SG-0 follower");
  }
  return unknown("even-path");
}

}  // namespace

Prediction classify_family(std::string_view spec, const SGSequence* sequence) {
  if (auto n = parse_size_after(spec, "path:")) return classify_path(*n, sequence);
  if (auto n = parse_size_after(spec, "cycle:")) {
    if (*n < 3) throw SpecError("cycle needs size >= 3");
    if (*n % 2 == 0) {
      return predict(false, "even-cycle-antipodal", {}, "answer v with its antipode");
    }
    Prediction path = classify_path(*n - 1, sequence);
    if (path.outcome == Predicted::Unknown) return unknown("cycle-from-path");
    return predict(path.outcome == Predicted::P, "cycle-from-path",
                   "any vertex, leaving path:" + std::to_string(*n - 1));
  }
  if (auto n = parse_size_after(spec, "wheel:")) {
    if (*n < 4) throw SpecError("wheel needs size >= 4");
    if (*n % 2 == 1) return predict(true, "odd-wheel-reflection", "delete the hub");
    Prediction path = classify_path(*n - 2, sequence);
    if (path.outcome == Predicted::Unknown) return unknown("wheel-from-path");
    return predict(path.outcome == Predicted::N, "wheel-from-path", "delete the hub",
                   "steer to path:" + std::to_string(*n - 2));
  }
  auto parts = multipartite_parts(spec);
  if (parts.empty()) {
    throw SpecError("classify_family: unsupported spec '" + std::string(spec) + "'");
  }
  return classify_multipartite(std::move(parts));
}

VertexId Involution::operator()(VertexId v) const {
  auto it = std::lower_bound(domain.begin(), domain.end(), v);
  if (it == domain.end() || *it != v) {
    throw GraphError("involution: vertex " + std::to_string(v) + " not in domain");
  }
  return image[static_cast<std::size_t>(it - domain.begin())];
}

std::size_t Involution::fixed_points() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < domain.size(); ++i) count += domain[i] == image[i];
  return count;
}

namespace {

// Backtracking over pairings compatible with a color refinement (automorphisms
// preserve refined colors). Vertices are visited in BFS order so adjacency
// constraints bite early.
class InvolutionSearch {
 public:
  InvolutionSearch(const Graph& g, std::size_t fixed)
      : n_(g.order()), fixed_target_(fixed), adj_(n_, std::vector<bool>(n_, false)) {
    auto ids = g.vertices();
    for (std::size_t i = 0; i < n_; ++i) {
      for (VertexId w : g.neighbors(ids[i])) adj_[i][g.index_of(w)] = true;
    }
    refine_colors();
    bfs_order();
  }

  std::optional<std::vector<int>> run() {
    if (fixed_target_ > n_ || (n_ - fixed_target_) % 2 != 0) return std::nullopt;
    partner_.assign(n_, -1);
    if (!search(0, 0)) return std::nullopt;
    return partner_;
  }

 private:
  void refine_colors() {
    color_.assign(n_, 0);
    std::size_t classes = 1;
    while (true) {
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n_);
      for (std::size_t v = 0; v < n_; ++v) {
        sig[v].first = color_[v];
        for (std::size_t w = 0; w < n_; ++w) {
          if (adj_[v][w]) sig[v].second.push_back(color_[w]);
        }
        std::sort(sig[v].second.begin(), sig[v].second.end());
      }
      auto sorted = sig;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (std::size_t v = 0; v < n_; ++v) {
        color_[v] = static_cast<std::size_t>(
            std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
      }
      if (sorted.size() == classes) break;
      classes = sorted.size();
    }
  }

  void bfs_order() {
    std::vector<bool> seen(n_, false);
    for (std::size_t s = 0; s < n_; ++s) {
      if (seen[s]) continue;
      seen[s] = true;
      std::size_t head = order_.size();
      order_.push_back(s);
      while (head < order_.size()) {
        std::size_t v = order_[head++];
        for (std::size_t w = 0; w < n_; ++w) {
          if (adj_[v][w] && !seen[w]) {
            seen[w] = true;
            order_.push_back(w);
          }
        }
      }
    }
  }

  bool consistent(std::size_t x) const {
    const auto px = static_cast<std::size_t>(partner_[x]);
    for (std::size_t u = 0; u < n_; ++u) {
      if (partner_[u] < 0) continue;
      if (adj_[x][u] != adj_[px][static_cast<std::size_t>(partner_[u])]) return false;
    }
    return true;
  }

  bool search(std::size_t pos, std::size_t fixed_used) {
    while (pos < n_ && partner_[order_[pos]] >= 0) ++pos;
    if (pos == n_) return fixed_used == fixed_target_;
    const std::size_t v = order_[pos];
    if (fixed_used < fixed_target_) {
      partner_[v] = static_cast<int>(v);
      if (consistent(v) && search(pos + 1, fixed_used + 1)) return true;
      partner_[v] = -1;
    }
    for (std::size_t w = 0; w < n_; ++w) {
      if (w == v || partner_[w] >= 0 || color_[w] != color_[v] || adj_[v][w]) continue;
      partner_[v] = static_cast<int>(w);
      partner_[w] = static_cast<int>(v);
      if (consistent(v) && consistent(w) && search(pos + 1, fixed_used)) return true;
      partner_[v] = partner_[w] = -1;
    }
    return false;
  }

  std::size_t n_;
  std::size_t fixed_target_;
  std::vector<std::vector<bool>> adj_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> order_;
  std::vector<int> partner_;
};

std::optional<Involution> search_involution(const Graph& g, std::size_t fixed,
                                            std::size_t cap) {
  if (g.order() > cap) throw CapExceeded("involution search", g.order(), cap);
  auto partner = InvolutionSearch(g, fixed).run();
  if (!partner) return std::nullopt;
  Involution sigma;
  auto ids = g.vertices();
  sigma.domain.assign(ids.begin(), ids.end());
  for (int p : *partner) sigma.image.push_back(ids[static_cast<std::size_t>(p)]);
  return sigma;
}

}  // namespace

std::optional<Involution> find_pairing_involution(const Graph& g, std::size_t cap) {
  if (g.empty()) return std::nullopt;
  return search_involution(g, 0, cap);
}

std::optional<NearInvolution> find_near_involution(const Graph& g, std::size_t cap) {
  if (g.empty()) return std::nullopt;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) {
      throw GraphError("find_near_involution: graph has isolated vertices");
    }
  }
  auto sigma = search_involution(g, 1, cap);
  if (!sigma) return std::nullopt;
  NearInvolution out{std::move(*sigma), 0};
  for (std::size_t i = 0; i < out.sigma.domain.size(); ++i) {
    if (out.sigma.domain[i] == out.sigma.image[i]) out.fixed_vertex = out.sigma.domain[i];
  }
  return out;
}

bool is_qualifying_involution(const Graph& g, const Involution& sigma,
                              std::size_t fixed) {
  auto ids = g.vertices();
  if (sigma.domain.size() != ids.size() ||
      !std::equal(ids.begin(), ids.end(), sigma.domain.begin())) {
    return false;
  }
  std::size_t fixed_seen = 0;
  for (VertexId v : ids) {
    VertexId w = 0;
    try {
      w = sigma(v);
      if (sigma(w) != v) return false;
    } catch (const GraphError&) {
      return false;
    }
    if (w == v) ++fixed_seen;
    else if (g.adjacent(v, w)) return false;
  }
  if (fixed_seen != fixed) return false;
  for (VertexId u : ids) {
    for (VertexId v : ids) {
      if (u < v && g.adjacent(u, v) != g.adjacent(sigma(u), sigma(v))) return false;
    }
  }
  return true;
}

Involution product_involution(const Graph& g, const Involution& sg,
                              const Graph& h, const Involution& sh) {
  const std::size_t nh = h.order();
  Involution out;
  for (std::size_t i = 0; i < g.order(); ++i) {
    const std::size_t gi = g.index_of(sg(g.vertices()[i]));
    for (std::size_t j = 0; j < nh; ++j) {
      const std::size_t hj = h.index_of(sh(h.vertices()[j]));
      out.domain.push_back(static_cast<VertexId>(i * nh + j));
      out.image.push_back(static_cast<VertexId>(gi * nh + hj));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification harness

namespace {

using Check = std::function<std::optional<std::string>()>;

// Nondecreasing part lists with every part >= min_part summing to total.
void partitions(std::size_t total, std::size_t min_part, std::vector<std::size_t>& current,
                std::vector<std::vector<std::size_t>>& out) {
  if (total == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t p = min_part; p <= total; ++p) {
    current.push_back(p);
    partitions(total - p, p, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_partitions(std::size_t max_total,
                                                     std::size_t min_part) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  for (std::size_t total = 1; total <= max_total; ++total) {
    partitions(total, min_part, current, out);
  }
  return out;
}

Check multipartite_check(std::vector<std::size_t> parts, Solver& solver) {
  return [parts = std::move(parts), &solver]() -> std::optional<std::string> {
    Prediction pred = classify_multipartite(parts);
    Outcome actual = solver.outcome(complete_multipartite(parts));
    if (pred.outcome == Predicted::Unknown) {
      return describe_parts(parts) + ": no rule applies (solver says " +
             to_string(actual) + ")";
    }
    if (std::string(to_string(pred.outcome)) != to_string(actual)) {
      return describe_parts(parts) + ": rule " + pred.rule + " predicts " +
             to_string(pred.outcome) + ", solver says " + to_string(actual);
    }
    return std::nullopt;
  };
}

std::vector<Check> multipartite_suite(std::size_t bound, Solver& solver,
                                      const std::function<bool(const std::vector<std::size_t>&)>& want) {
  std::vector<Check> checks;
  for (auto& parts : all_partitions(bound, 1)) {
    if (want(parts)) checks.push_back(multipartite_check(parts, solver));
  }
  return checks;
}

std::size_t ones(const std::vector<std::size_t>& parts) {
  return static_cast<std::size_t>(std::count(parts.begin(), parts.end(), 1));
}

Check family_check(std::string spec, const SGSequence& seq, Solver& solver) {
  return [spec = std::move(spec), &seq, &solver]() -> std::optional<std::string> {
    Prediction pred = classify_family(spec, &seq);
    Outcome actual = solver.outcome(make_family(spec));
    if (pred.outcome == Predicted::Unknown ||
        std::string(to_string(pred.outcome)) != to_string(actual)) {
      return spec + ": rule " + pred.rule + " predicts " + to_string(pred.outcome) +
             ", solver says " + to_string(actual);
    }
    return std::nullopt;
  };
}

std::vector<Check> paths_cycles_wheels(std::size_t bound, Solver& solver,
                                       std::shared_ptr<SGSequence> seq) {
  std::vector<Check> checks;
  for (std::size_t n = 2; n <= bound; ++n) {
    checks.push_back(family_check("path:" + std::to_string(n), *seq, solver));
    if (n >= 3) checks.push_back(family_check("cycle:" + std::to_string(n), *seq, solver));
    if (n >= 4) checks.push_back(family_check("wheel:" + std::to_string(n), *seq, solver));
    // The symmetry witnesses behind the odd-path, even-cycle and odd-wheel
    // claims.
    if (n >= 3 && n % 2 == 1) {
      checks.push_back([n]() -> std::optional<std::string> {
        Graph g = path_graph(n);
        auto near = find_near_involution(g);
        if (!near || near->fixed_vertex != (n - 1) / 2) {
          return "path:" + std::to_string(n) + ": no reflection fixing the middle vertex";
        }
        return std::nullopt;
      });
    }
    if (n >= 4 && n % 2 == 0) {
      checks.push_back([n]() -> std::optional<std::string> {
        if (!find_pairing_involution(cycle_graph(n))) {
          return "cycle:" + std::to_string(n) + ": no pairing involution";
        }
        return std::nullopt;
      });
    }
    if (n >= 5 && n % 2 == 1) {
      checks.push_back([n]() -> std::optional<std::string> {
        auto near = find_near_involution(wheel_graph(n));
        if (!near || near->fixed_vertex != n - 1) {
          return "wheel:" + std::to_string(n) + ": no involution fixing the hub";
        }
        return std::nullopt;
      });
    }
  }
  // Keeps the sequence alive as long as the checks.
  for (auto& c : checks) c = [c, seq] { return c(); };
  return checks;
}

std::vector<Check> union_self(std::size_t bound, std::shared_ptr<Solver> whole) {
  std::vector<Check> checks;
  for (std::size_t n = 2; n <= bound; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      // Graphs with isolated vertices normalize to a smaller class that is
      // enumerated on its own.
      if (normalize(g).order() != n) continue;
      checks.push_back([g, whole]() -> std::optional<std::string> {
        Graph doubled = disjoint_union(g, g);
        SGValue value = whole->sg_value(doubled);
        if (value != 0) {
          return "G u G with G=" + to_string(g) + " has SG " + std::to_string(value);
        }
        if (doubled.order() <= kDefaultAutomorphismCap &&
            !find_pairing_involution(doubled)) {
          return "G u G with G=" + to_string(g) + ": no pairing involution found";
        }
        return std::nullopt;
      });
    }
  }
  return checks;
}

std::vector<Check> cartesian(std::size_t bound, Solver& solver) {
  std::vector<Graph> factors;
  for (std::size_t n = 2; n * 2 <= bound; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      if (is_connected(g)) factors.push_back(g);
    }
  }
  std::vector<Check> checks;
  for (std::size_t a = 0; a < factors.size(); ++a) {
    for (std::size_t b = a; b < factors.size(); ++b) {
      const Graph& g = factors[a];
      const Graph& h = factors[b];
      if (g.order() * h.order() > bound) continue;
      auto pg = find_pairing_involution(g);
      auto ph = find_pairing_involution(h);
      if (pg && ph) {
        checks.push_back([g, h, sg = *pg, sh = *ph, &solver]() -> std::optional<std::string> {
          Graph prod = cartesian_product(g, h);
          Involution sigma = product_involution(g, sg, h, sh);
          if (!is_qualifying_involution(prod, sigma, 0)) {
            return "product map is not a pairing involution on " + to_string(prod);
          }
          if (solver.outcome(prod) != Outcome::P) {
            return "product of pairing graphs is not P: " + to_string(prod);
          }
          return std::nullopt;
        });
      }
      auto ng = find_near_involution(g);
      auto nh = find_near_involution(h);
      if (ng && nh) {
        checks.push_back([g, h, sg = *ng, sh = *nh, &solver]() -> std::optional<std::string> {
          Graph prod = cartesian_product(g, h);
          Involution sigma = product_involution(g, sg.sigma, h, sh.sigma);
          if (!is_qualifying_involution(prod, sigma, 1)) {
            return "product map is not a near-involution on " + to_string(prod);
          }
          const VertexId fixed = static_cast<VertexId>(
              g.index_of(sg.fixed_vertex) * h.order() + h.index_of(sh.fixed_vertex));
          if (solver.sg_value(follower(prod, fixed)) != 0) {
            return "fixed vertex is not a winning move on " + to_string(prod);
          }
          return std::nullopt;
        });
      }
    }
  }
  return checks;
}

std::vector<Check> blowup_suite(std::size_t bound, Solver& solver) {
  constexpr std::uint32_t kMaxWeight = 3;
  std::vector<WeightedGraph> cases;
  for (std::size_t n = 1; n <= bound; ++n) {
    for (const Graph& g : nonisomorphic_graphs(n)) {
      std::map<CanonicalKey, WeightedGraph> distinct;
      std::vector<std::uint32_t> w(n, 1);
      while (true) {
        distinct.try_emplace(canonical_form(g, w), make_weighted(g, w));
        std::size_t i = 0;
        while (i < n && w[i] == kMaxWeight) w[i++] = 1;
        if (i == n) break;
        ++w[i];
      }
      for (auto& [key, wg] : distinct) cases.push_back(std::move(wg));
    }
  }
  auto weighted = std::make_shared<WeightedSolver>();
  auto weighted_mutex = std::make_shared<std::mutex>();
  std::vector<Check> checks;
  for (auto& wg : cases) {
    checks.push_back([wg, weighted, weighted_mutex, &solver]() -> std::optional<std::string> {
      Outcome direct;
      {
        std::lock_guard lock(*weighted_mutex);
        direct = weighted->outcome(wg);
      }
      Outcome blown = solver.outcome(blowup(wg));
      if (direct != blown) {
        return emit_weighted(wg) + ": weighted game " + to_string(direct) +
               ", blowup " + to_string(blown);
      }
      return std::nullopt;
    });
  }
  return checks;
}

std::vector<Check> octal_equiv(std::size_t bound, Solver& solver) {
  auto seq = std::make_shared<SGSequence>(octal6_sequence(std::max<std::size_t>(bound, 1)));
  std::vector<Check> checks;
  for (std::size_t n = 2; n <= bound; ++n) {
    checks.push_back([n, seq, &solver]() -> std::optional<std::string> {
      SGValue path = solver.sg_value(path_graph(n));
      if (path != (*seq)[n]) {
        return "n=" + std::to_string(n) + ": path " + std::to_string(path) +
               ", octal .6 " + std::to_string((*seq)[n]);
      }
      return std::nullopt;
    });
  }
  return checks;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> suites = {
      "complete",        "bipartite",          "k1mn",          "multipartite-no1s",
      "one-singleton",   "singleton-parity",   "singleton-alpha", "k113n",
      "paths-cycles-wheels", "union-self",     "cartesian",     "blowup",
      "octal-equiv"};
  return suites;
}

VerificationReport verify(std::string_view suite, std::size_t bound,
                          const VerifyOptions& options) {
  SolverOptions solver_options;
  solver_options.component_cap = std::max<std::size_t>(16, bound);
  Solver solver(solver_options);
  std::vector<Check> checks;

  using Parts = std::vector<std::size_t>;
  if (suite == "complete") {
    for (std::size_t n = 1; n <= bound; ++n) {
      checks.push_back(multipartite_check(Parts(n, 1), solver));
    }
  } else if (suite == "bipartite") {
    checks = multipartite_suite(bound, solver, [](const Parts& p) { return p.size() == 2; });
  } else if (suite == "k1mn") {
    checks = multipartite_suite(bound, solver, [](const Parts& p) {
      return p.size() == 3 && p[0] == 1;
    });
  } else if (suite == "multipartite-no1s") {
    checks = multipartite_suite(bound, solver, [](const Parts& p) {
      return p.size() >= 3 && p[0] >= 2;
    });
  } else if (suite == "one-singleton") {
    checks = multipartite_suite(bound, solver, [](const Parts& p) {
      return p.size() > 3 && ones(p) == 1;
    });
  } else if (suite == "singleton-parity") {
    for (std::size_t t = 1; t <= bound; ++t) {
      checks.push_back(multipartite_check(Parts(t, 1), solver));
    }
  } else if (suite == "singleton-alpha") {
    checks = multipartite_suite(bound, solver, [](const Parts& p) {
      std::size_t alpha = 0;
      for (std::size_t x : p) alpha += x - 1;
      const std::size_t k = ones(p);
      return p.size() > 3 && k > 1 && k < p.size() && k > alpha;
    });
  } else if (suite == "k113n") {
    for (std::size_t n = 3; n + 5 <= bound; ++n) {
      checks.push_back(multipartite_check(Parts{1, 1, 3, n}, solver));
    }
  } else if (suite == "paths-cycles-wheels") {
    auto seq = std::make_shared<SGSequence>(octal6_sequence(std::max<std::size_t>(bound, 1)));
    checks = paths_cycles_wheels(bound, solver, seq);
  } else if (suite == "union-self") {
    SolverOptions whole_options;
    whole_options.decompose = false;
    whole_options.component_cap = std::max<std::size_t>(16, 2 * bound);
    checks = union_self(bound, std::make_shared<Solver>(whole_options));
  } else if (suite == "cartesian") {
    checks = cartesian(bound, solver);
  } else if (suite == "blowup") {
    checks = blowup_suite(bound, solver);
  } else if (suite == "octal-equiv") {
    checks = octal_equiv(bound, solver);
  } else {
    throw std::invalid_argument("unknown verification suite '" + std::string(suite) + "'");
  }

  std::vector<std::optional<std::string>> results(checks.size());
  parallel_for(checks.size(), options.threads,
               [&](std::size_t i) { results[i] = checks[i](); });

  VerificationReport report;
  report.suite = std::string(suite);
  report.size_bound = bound;
  report.instances = checks.size();
  for (auto& r : results) {
    if (r) {
      ++report.failed;
      report.counterexamples.push_back(std::move(*r));
    } else {
      ++report.passed;
    }
  }
  return report;
}

}  // namespace grim
