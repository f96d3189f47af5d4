#include "doctest.h"

#include <bit>
#include <cmath>
#include <map>

#include "grim/random_analysis.hpp"
#include "grim/solver.hpp"
#include "oracles.hpp"

using namespace grim;

namespace {

const EdgeCountHistogram& hist(std::size_t n) {
  static std::map<std::size_t, EdgeCountHistogram> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, exact_histogram(n)).first;
  return it->second;
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (m - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("histograms") {
  CHECK(hist(2).p_counts == std::vector<std::uint64_t>{1, 0});
  CHECK(hist(3).p_counts == std::vector<std::uint64_t>{1, 0, 0, 1});
  CHECK(hist(4).p_counts == std::vector<std::uint64_t>{1, 0, 3, 16, 3, 0, 0});
  CHECK(hist(1).p_counts == std::vector<std::uint64_t>{1});
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto& h = hist(n);
    CHECK(h.m_max == n * (n - 1) / 2);
    for (std::size_t k = 0; k <= h.m_max; ++k) {
      CHECK(h.total_counts[k] == binomial(h.m_max, k));
      CHECK(h.p_counts[k] + h.n_count(k) == h.total_counts[k]);
      CHECK(h.p_counts[k] <= h.total_counts[k]);
    }
  }
  CHECK_THROWS_AS(exact_histogram(7), CapExceeded);
}

TEST_CASE("histograms match the brute-force oracle") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t m = n * (n - 1) / 2;
    std::vector<std::uint64_t> counts(m + 1, 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
      oracle::BruteGrim brute(oracle::rows_from_mask(n, mask));
      if (brute.sg() == 0) ++counts[std::popcount(mask)];
    }
    CHECK(hist(n).p_counts == counts);
  }
}

TEST_CASE("histogram is independent of the thread count") {
  Solver a, b;
  CHECK(exact_histogram(5, a, 1).p_counts == exact_histogram(5, b, 3).p_counts);
}

TEST_CASE("w2 and w1") {
  CHECK(w2(hist(3), 0.5) == doctest::Approx(0.25).epsilon(1e-15));
  for (std::size_t n = 1; n <= 6; ++n) CHECK(w2(hist(n), 0.0) == 1.0);
  CHECK(w2(hist(3), 1.0) == 1.0);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int i = 0; i <= 100; ++i) {
      double p = i / 100.0;
      CHECK(std::abs(w1(hist(n), p) + w2(hist(n), p) - 1.0) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(w2(hist(3), -0.1), std::domain_error);
  CHECK_THROWS_AS(w1(hist(3), 1.5), std::domain_error);
}

TEST_CASE("n = 3 matches the closed form") {
  for (int i = 0; i <= 100; ++i) {
    double p = i / 100.0;
    CHECK(std::abs(w2(hist(3), p) - (std::pow(1 - p, 3) + std::pow(p, 3))) <= 1e-12);
  }
  CHECK(polynomial_string(hist(3)) == "(1-p)^3 + p^3");
}

TEST_CASE("crossings") {
  auto two = crossings(hist(2), 1e-12);
  REQUIRE(two.roots.size() == 1);
  CHECK(std::abs(two.roots[0] - 0.5) <= 1e-9);

  auto three = crossings(hist(3), 1e-12);
  REQUIRE(three.roots.size() == 2);
  CHECK(std::abs(three.roots[0] - (3 - std::sqrt(3.0)) / 6) <= 1e-9);
  CHECK(std::abs(three.roots[1] - (3 + std::sqrt(3.0)) / 6) <= 1e-9);
  CHECK(three.method == "exact-bisection");
  for (double r : three.roots) CHECK(std::abs(w2(hist(3), r) - 0.5) <= 1e-9);

  auto four = crossings(hist(4), 1e-12);
  REQUIRE(four.roots.size() == 1);
  // Root of the enumerated polynomial; see the README on the n = 4 case.
  CHECK(four.roots[0] == doctest::Approx(0.124041).epsilon(1e-5));
  for (int i = 200; i <= 1000; ++i) CHECK(w2(hist(4), i / 1000.0) < 0.5);
}

TEST_CASE("published n = 4 polynomial differs from the enumeration") {
  CHECK(published_n4_polynomial().find("(1-p)^5") != std::string::npos);
  CHECK(published_n4_w2(0.0) == 1.0);
  double gap = 0;
  for (int i = 1; i < 100; ++i) gap = std::max(gap, std::abs(published_n4_w2(i / 100.0) - w2(hist(4), i / 100.0)));
  CHECK(gap > 1e-3);
}

TEST_CASE("monte carlo") {
  Solver solver;
  auto e3 = monte_carlo(3, 0.5, 100000, 42, solver);
  CHECK(std::abs(e3.estimate - 0.25) <= 3 * e3.std_error);
  auto e4 = monte_carlo(4, 0.16, 100000, 43, solver);
  CHECK(std::abs(e4.estimate - w2(hist(4), 0.16)) <= 3 * e4.std_error);
  auto zero = monte_carlo(5, 0.0, 1000, 1, solver);
  CHECK(zero.estimate == 1.0);
  CHECK(zero.std_error == 0.0);

  auto a = monte_carlo(6, 0.3, 10000, 77, solver, 1);
  auto b = monte_carlo(6, 0.3, 10000, 77, solver, 3);
  CHECK(a.p_positions == b.p_positions);
  CHECK(monte_carlo(12, 0.2, 200, 5, solver).trials == 200);
  CHECK_THROWS(monte_carlo(3, 0.5, 0, 1, solver));
  CHECK_THROWS(monte_carlo(3, 1.5, 10, 1, solver));
}

TEST_CASE("monte carlo converges for n = 3, p = 0.3") {
  Solver solver;
  const double exact = w2(hist(3), 0.3);
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto e = monte_carlo(3, 0.3, 2000, seed, solver);
    if (std::abs(e.estimate - exact) <= 4 * e.std_error) ++inside;
  }
  CHECK(inside >= 99);
}

TEST_CASE("p0 bound") {
  CHECK(p0_bound(3) == doctest::Approx(0.793701).epsilon(1e-6));
  CHECK(p0_bound(5) == doctest::Approx(0.933033).epsilon(1e-6));
  CHECK(p0_bound(7) > p0_bound(5));
  CHECK_THROWS(p0_bound(4));
  CHECK_THROWS(p0_bound(1));
  for (std::size_t n : {3, 5}) {
    for (int i = 0; i <= 100; ++i) {
      double p = i / 100.0;
      CHECK(w2(hist(n), p) >= std::pow(p, n * (n - 1) / 2) - 1e-15);
      if (p >= p0_bound(n)) CHECK(w2(hist(n), p) >= 0.5);
    }
  }
}
