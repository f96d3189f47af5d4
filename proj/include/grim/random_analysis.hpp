#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "grim/solver.hpp"

namespace grim {

// Exact tallies, by edge count, of the labeled graphs on n vertices that are
// P positions. The empty graph counts (it is a P position).
struct EdgeCountHistogram {
  std::size_t n = 0;
  std::size_t m_max = 0;
  std::vector<std::uint64_t> p_counts;
  std::vector<std::uint64_t> total_counts;

  std::uint64_t n_count(std::size_t k) const { return total_counts[k] - p_counts[k]; }
};

inline constexpr std::size_t kDefaultHistogramCap = 6;

EdgeCountHistogram exact_histogram(std::size_t n, Solver& solver,
                                   std::size_t threads = 1,
                                   std::size_t cap = kDefaultHistogramCap);
EdgeCountHistogram exact_histogram(std::size_t n);

// Probability that the second player wins G(n, p): sum over k of
// p_counts[k] p^k (1-p)^(m_max-k). Throws std::domain_error outside [0, 1].
double w2(const EdgeCountHistogram& hist, double p);
// Same over the N positions.
double w1(const EdgeCountHistogram& hist, double p);

// W2 as "c p^k (1-p)^j + ..." with zero terms omitted.
std::string polynomial_string(const EdgeCountHistogram& hist);

// The n = 4 polynomial as it appears in the literature, (1-p)^5 term included;
// kept only to report the difference from the enumeration.
double published_n4_w2(double p);
std::string published_n4_polynomial();

struct CrossingReport {
  std::size_t n = 0;
  std::vector<double> roots;
  std::string method;
  double tolerance = 0;
};

// Roots of W2(p) = 1/2 in [0, 1]: sign changes on a uniform grid, each refined
// by bisection until the bracket is no wider than `tol`.
CrossingReport crossings(const EdgeCountHistogram& hist, double tol,
                         double step = 1e-3);

struct MonteCarloEstimate {
  std::size_t n = 0;
  double p = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t p_positions = 0;
  double estimate = 0;   // fraction of sampled graphs that are P positions
  double std_error = 0;  // binomial standard error of `estimate`
};

// Samples G(n, p) `trials` times. Trials are grouped into fixed blocks, each
// with its own generator derived from (seed, block), so the result does not
// depend on the thread count.
MonteCarloEstimate monte_carlo(std::size_t n, double p, std::size_t trials,
                               std::uint64_t seed, Solver& solver,
                               std::size_t threads = 1);

// (1/4)^(1/(n^2-n)): above this p, K_n alone gives W2 >= 1/2. n odd, >= 3.
double p0_bound(std::size_t n);

}  // namespace grim
