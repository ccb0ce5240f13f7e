#include "doctest.h"
#include "parasoc/dodgson.hpp"
#include "parasoc/errors.hpp"
#include "support/oracles.hpp"

using namespace parasoc;

namespace {

Election figure1() {
  return Election(4, {PreferenceOrder({0, 1, 2, 3}), PreferenceOrder({0, 1, 3, 2}),
                      PreferenceOrder({2, 1, 0, 3})});
}

}  // namespace

TEST_CASE("program construction") {
  const auto e = figure1();
  const auto prog = build_program(e, 1);
  CHECK(prog.deficits[0] == 1);
  CHECK(prog.deficits[2] == 0);
  CHECK(prog.deficits[3] == 0);
  CHECK(prog.types.size() == 3);

  const auto cw = build_program(e, 0);
  for (int d : cw.deficits) CHECK(d == 0);

  const Election unanimous(3, {PreferenceOrder({1, 0, 2}), PreferenceOrder({1, 0, 2})});
  const auto u = build_program(unanimous, 1);
  REQUIRE(u.types.size() == 1);
  CHECK(u.types[0].multiplicity == 2);
  CHECK(u.types[0].max_lift == 0);
}

TEST_CASE("figure 1 scores") {
  const auto e = figure1();
  CHECK(dodgson_score(e, 0).score == 0);
  CHECK(dodgson_score(e, 1).score == 1);
  CHECK(dodgson_decision(e, 0, 0));
  CHECK_FALSE(dodgson_decision(e, 1, 0));
  CHECK(dodgson_decision(e, 1, 1));
  const auto p = oracle::profile_of(e);
  for (int c = 0; c < 4; ++c) {
    const auto expected = oracle::dodgson_bfs(4, p, c, 12);
    REQUIRE(expected);
    CHECK(dodgson_score(e, c).score == *expected);
    CHECK(dodgson_bruteforce(e, c, 8) == expected);
  }
}

TEST_CASE("solutions satisfy their program") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + oracle::below(rng, 5), n = 1 + oracle::below(rng, 8);
    const auto e = oracle::election_of(m, oracle::random_profile(rng, m, n));
    const int c = oracle::below(rng, m);
    const auto prog = build_program(e, c);
    const auto sol = solve_program(prog);
    REQUIRE(sol.feasible);
    CHECK(satisfies(prog, sol));
    CHECK((sol.score == 0) == (condorcet_winner(e) == c));
  }
}

TEST_CASE("brute force caps and limits") {
  const auto e = figure1();
  CHECK_FALSE(dodgson_bruteforce(e, 1, 0));
  CHECK(dodgson_bruteforce(e, 0, 0) == 0);
  const Election big(5, {PreferenceOrder::identity(5), PreferenceOrder::identity(5),
                         PreferenceOrder::identity(5), PreferenceOrder::identity(5)});
  CHECK_THROWS_AS(dodgson_bruteforce(big, 4, 3), CapacityError);
}

TEST_CASE("agrees with independent swap search on small elections") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const int m = 2 + oracle::below(rng, 3), n = 1 + oracle::below(rng, 4);
    const auto p = oracle::random_profile(rng, m, n);
    const int c = oracle::below(rng, m);
    const auto expected = oracle::dodgson_bfs(m, p, c, n * m * (m - 1) / 2);
    REQUIRE(expected);
    CHECK(dodgson_score(oracle::election_of(m, p), c).score == *expected);
  }
}
