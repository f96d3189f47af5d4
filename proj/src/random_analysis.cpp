#include "grim/random_analysis.hpp"

#include <bit>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "grim/enumerate.hpp"
#include "grim/parallel.hpp"

namespace grim {

namespace {

constexpr std::size_t kMonteCarloBlock = 4096;

std::uint64_t binomial(std::size_t n, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::domain_error("probability out of range: " + std::to_string(p));
  }
}

double weighted_sum(const EdgeCountHistogram& hist, double p, bool p_positions) {
  check_probability(p);
  long double sum = 0;
  for (std::size_t k = 0; k <= hist.m_max; ++k) {
    const std::uint64_t c = p_positions ? hist.p_counts[k] : hist.n_count(k);
    if (c == 0) continue;
    sum += static_cast<long double>(c) * std::pow(static_cast<long double>(p), k) *
           std::pow(1.0L - p, hist.m_max - k);
  }
  return static_cast<double>(sum);
}

}  // namespace

EdgeCountHistogram exact_histogram(std::size_t n, Solver& solver, std::size_t threads,
                                   std::size_t cap) {
  if (n > cap) throw CapExceeded("exact_histogram", n, cap);
  EdgeCountHistogram hist;
  hist.n = n;
  hist.m_max = pair_count(n);
  hist.p_counts.assign(hist.m_max + 1, 0);
  for (std::size_t k = 0; k <= hist.m_max; ++k) {
    hist.total_counts.push_back(binomial(hist.m_max, k));
  }
  const std::uint64_t graphs = std::uint64_t{1} << hist.m_max;
  constexpr std::uint64_t kChunk = 1024;
  const auto chunks = static_cast<std::size_t>((graphs + kChunk - 1) / kChunk);
  std::vector<std::vector<std::uint64_t>> partial(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    auto& counts = partial[c];
    counts.assign(hist.m_max + 1, 0);
    const std::uint64_t end = std::min<std::uint64_t>(graphs, (c + 1) * kChunk);
    for (std::uint64_t mask = c * kChunk; mask < end; ++mask) {
      if (solver.outcome(graph_from_mask(n, mask)) == Outcome::P) {
        ++counts[static_cast<std::size_t>(std::popcount(mask))];
      }
    }
  });
  for (const auto& counts : partial) {
    for (std::size_t k = 0; k <= hist.m_max; ++k) hist.p_counts[k] += counts[k];
  }
  return hist;
}

EdgeCountHistogram exact_histogram(std::size_t n) {
  Solver solver;
  return exact_histogram(n, solver);
}

double w2(const EdgeCountHistogram& hist, double p) { return weighted_sum(hist, p, true); }
double w1(const EdgeCountHistogram& hist, double p) { return weighted_sum(hist, p, false); }

std::string polynomial_string(const EdgeCountHistogram& hist) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k <= hist.m_max; ++k) {
    const std::uint64_t c = hist.p_counts[k];
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c;
    if (k >= 1) os << 'p';
    if (k > 1) os << '^' << k;
    const std::size_t j = hist.m_max - k;
    if (j >= 1) os << "(1-p)";
    if (j > 1) os << '^' << j;
    if (c == 1 && k == 0 && j == 0) os << '1';
  }
  return first ? "0" : os.str();
}

double published_n4_w2(double p) {
  check_probability(p);
  const double q = 1.0 - p;
  return 3 * p * p * std::pow(q, 4) + 16 * std::pow(p, 3) * std::pow(q, 3) + std::pow(q, 5);
}

std::string published_n4_polynomial() { return "3p^2(1-p)^4 + 16p^3(1-p)^3 + (1-p)^5"; }

CrossingReport crossings(const EdgeCountHistogram& hist, double tol, double step) {
  if (!(tol > 0)) throw std::invalid_argument("crossings: tolerance must be > 0");
  if (!(step > 0 && step <= 1)) throw std::invalid_argument("crossings: bad grid step");
  CrossingReport report;
  report.n = hist.n;
  report.method = "exact-bisection";
  report.tolerance = tol;
  const auto cells = static_cast<std::size_t>(std::llround(1.0 / step));
  auto f = [&](double p) { return w2(hist, p) - 0.5; };
  auto grid = [&](std::size_t i) {
    return i == cells ? 1.0 : static_cast<double>(i) / static_cast<double>(cells);
  };
  double prev_p = grid(0);
  double prev_f = f(prev_p);
  if (prev_f == 0) report.roots.push_back(prev_p);
  for (std::size_t i = 1; i <= cells; ++i) {
    const double p = grid(i);
    const double fp = f(p);
    if (fp == 0) {
      report.roots.push_back(p);
    } else if (prev_f != 0 && (prev_f < 0) != (fp < 0)) {
      double lo = prev_p;
      double hi = p;
      double flo = prev_f;
      while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm < 0) == (flo < 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      report.roots.push_back(0.5 * (lo + hi));
    }
    prev_p = p;
    prev_f = fp;
  }
  return report;
}

MonteCarloEstimate monte_carlo(std::size_t n, double p, std::size_t trials,
                               std::uint64_t seed, Solver& solver, std::size_t threads) {
  check_probability(p);
  if (trials == 0) throw std::invalid_argument("monte_carlo: trials must be >= 1");
  if (n > solver.options().component_cap) {
    throw CapExceeded("monte_carlo", n, solver.options().component_cap);
  }
  const std::size_t blocks = (trials + kMonteCarloBlock - 1) / kMonteCarloBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b)));
    const std::size_t count = std::min(kMonteCarloBlock, trials - b * kMonteCarloBlock);
    for (std::size_t t = 0; t < count; ++t) {
      Graph g(n);
      for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
          if (u < p) g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
        }
      }
      if (solver.outcome(g) == Outcome::P) ++hits[b];
    }
  });
  MonteCarloEstimate est;
  est.n = n;
  est.p = p;
  est.trials = trials;
  est.seed = seed;
  for (auto h : hits) est.p_positions += h;
  est.estimate = static_cast<double>(est.p_positions) / static_cast<double>(trials);
  est.std_error = std::sqrt(est.estimate * (1 - est.estimate) / static_cast<double>(trials));
  return est;
}

double p0_bound(std::size_t n) {
  if (n < 3 || n % 2 == 0) {
    throw std::invalid_argument("p0_bound: n must be odd and >= 3");
  }
  return std::pow(0.25, 1.0 / static_cast<double>(n * n - n));
}

}  // namespace grim
