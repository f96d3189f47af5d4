#include "doctest.h"

#include "grim/enumerate.hpp"
#include "grim/engine.hpp"
#include "grim/family.hpp"
#include "grim/octal6.hpp"
#include "grim/solver.hpp"
#include "grim/theory.hpp"
#include "support.hpp"

using namespace grim;

namespace {

Predicted as_predicted(Outcome o) { return o == Outcome::N ? Predicted::N : Predicted::P; }

// Every multiset of parts (nonincreasing) with the given total.
void partitions(std::size_t remaining, std::size_t largest, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(remaining, largest); p >= 1; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("multipartite classifier examples") {
  CHECK(classify_multipartite({4, 4}).outcome == Predicted::P);
  CHECK(classify_multipartite({2, 2, 2}).outcome == Predicted::P);
  CHECK(classify_multipartite({1, 3, 3}).outcome == Predicted::N);
  CHECK(classify_multipartite({5}).outcome == Predicted::P);
  CHECK(classify_multipartite({1, 1, 1}).outcome == Predicted::P);
  CHECK(classify_multipartite({1, 1, 1, 1}).outcome == Predicted::N);
  CHECK(classify_multipartite({1, 6}).outcome == Predicted::N);
  CHECK(classify_multipartite({2, 3}).outcome == Predicted::N);
  CHECK(classify_multipartite({1, 1, 4}).outcome == Predicted::N);
  CHECK(classify_multipartite({1, 1, 3}).outcome == Predicted::P);
  // m = 2 goes to the {1,2,n} rule even when m + n is odd.
  CHECK(classify_multipartite({1, 2, 3}).outcome == Predicted::N);
  CHECK(classify_multipartite({1, 2, 3}).rule == "k12n");
  CHECK(classify_multipartite({1, 3, 4}).outcome == Predicted::P);
  CHECK(classify_multipartite({1, 3, 3, 3}).outcome == Predicted::P);
  CHECK(classify_multipartite({1, 2, 3, 3}).outcome == Predicted::N);
  CHECK(classify_multipartite({1, 1, 3, 5}).outcome == Predicted::N);

  Prediction open = classify_multipartite({1, 1, 2, 2, 2});
  CHECK(open.outcome == Predicted::Unknown);
  CHECK(open.witness.empty());

  CHECK_THROWS_AS(classify_multipartite({}), std::invalid_argument);
  CHECK_THROWS_AS(classify_multipartite({2, 0}), std::invalid_argument);
}

TEST_CASE("family classifier examples") {
  CHECK(classify_family("path:7").outcome == Predicted::N);
  CHECK(classify_family("path:4").outcome == Predicted::P);
  CHECK(classify_family("path:6").outcome == Predicted::Unknown);
  CHECK(classify_family("cycle:8").outcome == Predicted::P);
  CHECK(classify_family("cycle:5").outcome == Predicted::N);
  CHECK(classify_family("wheel:6").outcome == Predicted::P);
  CHECK(classify_family("wheel:7").outcome == Predicted::N);
  CHECK(classify_family("complete:3").outcome == Predicted::P);
  CHECK(classify_family("star:5").outcome == Predicted::N);

  SGSequence seq = octal6_sequence(50);
  CHECK(classify_family("path:6", &seq).outcome == Predicted::N);
  CHECK(classify_family("cycle:7", &seq).outcome == Predicted::P);
  CHECK(classify_family("wheel:8", &seq).outcome == Predicted::N);

  CHECK_THROWS(classify_family("union(path:2,path:2)"));
  CHECK_THROWS(classify_family("g6:Bw"));
}

TEST_CASE("known path zeros") {
  auto z = known_path_zeros();
  CHECK(std::vector<std::size_t>(z.begin(), z.end()) ==
        std::vector<std::size_t>{4, 12, 20, 30, 46, 72, 98, 124, 150, 176, 314, 408});
}

TEST_CASE("pairing involutions") {
  auto c6 = find_pairing_involution(cycle_graph(6));
  REQUIRE(c6.has_value());
  CHECK(is_qualifying_involution(cycle_graph(6), *c6, 0));
  for (VertexId v = 0; v < 6; ++v) CHECK((*c6)(v) == (v + 3) % 6);

  CHECK_FALSE(find_pairing_involution(complete_graph(3)).has_value());

  Graph two = disjoint_union(cycle_graph(3), cycle_graph(3));
  auto swap = find_pairing_involution(two);
  REQUIRE(swap.has_value());
  CHECK(is_qualifying_involution(two, *swap, 0));

  CHECK_THROWS_AS(find_pairing_involution(path_graph(13)), CapExceeded);
}

TEST_CASE("near involutions") {
  auto p5 = find_near_involution(path_graph(5));
  REQUIRE(p5.has_value());
  CHECK(p5->fixed_vertex == 2);
  CHECK(p5->sigma(0) == 4);

  auto w5 = find_near_involution(wheel_graph(5));
  REQUIRE(w5.has_value());
  CHECK(w5->fixed_vertex == 4);
  CHECK(is_qualifying_involution(wheel_graph(5), w5->sigma, 1));

  CHECK_FALSE(find_near_involution(cycle_graph(4)).has_value());
  CHECK_THROWS(find_near_involution(Graph(3)));
}

TEST_CASE("cycle 4 has no automorphism with a single fixed vertex and no fixed edges") {
  // All eight symmetries of the square, written out.
  const int maps[8][4] = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2},
                          {0, 3, 2, 1}, {2, 1, 0, 3}, {1, 0, 3, 2}, {3, 2, 1, 0}};
  Graph c4 = cycle_graph(4);
  for (const auto& m : maps) {
    Involution s;
    for (VertexId v = 0; v < 4; ++v) {
      s.domain.push_back(v);
      s.image.push_back(static_cast<VertexId>(m[v]));
    }
    CHECK_FALSE(is_qualifying_involution(c4, s, 1));
  }
}

TEST_CASE("involution hits are sound on every graph up to 7 vertices") {
  Solver solver;
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& raw : nonisomorphic_graphs(n)) {
      Graph g = normalize(raw);
      if (g.empty()) continue;
      if (auto s = find_pairing_involution(g)) {
        REQUIRE(is_qualifying_involution(g, *s, 0));
        REQUIRE(solver.sg_value(g) == 0);
      }
      if (auto s = find_near_involution(g)) {
        REQUIRE(is_qualifying_involution(g, s->sigma, 1));
        REQUIRE(solver.outcome(g) == Outcome::N);
        auto wins = solver.winning_moves(g);
        REQUIRE(std::find(wins.begin(), wins.end(), s->fixed_vertex) != wins.end());
      }
    }
  }
}

TEST_CASE("product involutions") {
  Graph c4 = cycle_graph(4), p2 = path_graph(2);
  auto a = find_pairing_involution(c4);
  // K2 has no pairing: its only swap maps a vertex across an edge.
  CHECK_FALSE(find_pairing_involution(p2).has_value());
  REQUIRE(a.has_value());
  Graph prod = cartesian_product(c4, cycle_graph(4));
  Involution sigma = product_involution(c4, *a, cycle_graph(4), *a);
  CHECK(is_qualifying_involution(prod, sigma, 0));
  Solver solver;
  CHECK(solver.outcome(prod) == Outcome::P);
}

// Rules i and j of the classifier do not hold everywhere at this size; the
// exceptions are pinned so any change in either direction shows up here.
TEST_CASE("classifier agrees with the solver up to 10 vertices, pinned exceptions aside") {
  const std::set<std::string> expected_disagreements{
      "K_{1,2,3,4}",
      "K_{1,1,1,2}",
      "K_{1,1,1,3}",
      "K_{1,1,1,1,2}",
      "K_{1,1,1,1,3}",
      "K_{1,1,1,1,4}",
      "K_{1,1,1,1,1,2}",
      "K_{1,1,1,1,1,3}",
      "K_{1,1,1,1,1,4}",
      "K_{1,1,1,1,1,5}",
      "K_{1,1,1,1,1,1,2}",
      "K_{1,1,1,1,1,1,3}",
      "K_{1,1,1,1,1,1,4}",
      "K_{1,1,1,1,2,2,2}",
      "K_{1,1,1,1,1,1,1,2}",
      "K_{1,1,1,1,1,1,1,3}",
      "K_{1,1,1,1,1,1,1,1,2}"};
  Solver solver;
  std::set<std::string> disagreements;
  std::size_t decided = 0;
  for (std::size_t total = 1; total <= 10; ++total) {
    std::vector<std::vector<std::size_t>> all;
    std::vector<std::size_t> cur;
    partitions(total, total, cur, all);
    for (auto parts : all) {
      std::sort(parts.begin(), parts.end());
      Prediction p = classify_multipartite(parts);
      if (p.outcome == Predicted::Unknown) continue;
      ++decided;
      if (p.outcome != as_predicted(solver.outcome(complete_multipartite(parts)))) {
        disagreements.insert(describe_parts(parts));
      }
    }
  }
  CHECK(decided > 100);
  for (const auto& d : disagreements) {
    CAPTURE(d);
    CHECK(expected_disagreements.count(d) == 1);
  }
  for (const auto& d : expected_disagreements) {
    CAPTURE(d);
    CHECK(disagreements.count(d) == 1);
  }
}

TEST_CASE("verify suites at small bounds") {
  VerifyOptions options;
  for (const auto& suite : verify_suites()) {
    if (suite == "singleton-alpha" || suite == "one-singleton") continue;
    CAPTURE(suite);
    std::size_t bound = suite == "cartesian" ? 9 : suite == "octal-equiv" ? 60 : 6;
    if (suite == "blowup") bound = 3;
    if (suite == "k113n") bound = 8;
    VerificationReport r = verify(suite, bound, options);
    CHECK(r.ok());
    CHECK(r.counterexamples.empty());
    CHECK(r.passed == r.instances);
  }
  CHECK(verify("one-singleton", 8).ok());
  VerificationReport r10 = verify("one-singleton", 10);
  CHECK(r10.failed == 1);
  REQUIRE(r10.counterexamples.size() == 1);
  CHECK(r10.counterexamples[0].find("K_{1,2,3,4}") != std::string::npos);
  CHECK_THROWS_AS(verify("no-such-suite", 5), std::invalid_argument);
}

TEST_CASE("verify is independent of the thread count") {
  VerifyOptions one, four;
  four.threads = 4;
  auto a = verify("union-self", 4, one);
  auto b = verify("union-self", 4, four);
  CHECK(a.instances == b.instances);
  CHECK(a.passed == b.passed);
}
