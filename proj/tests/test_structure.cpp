#include "doctest.h"
#include "parasoc/errors.hpp"
#include "parasoc/structure.hpp"
#include "support/oracles.hpp"

using namespace parasoc;

namespace {

Election figure2() {
  return Election(5, {PreferenceOrder({0, 1, 2, 3, 4}), PreferenceOrder({2, 3, 1, 0, 4}),
                      PreferenceOrder({2, 1, 0, 3, 4})});
}

Axis axis(std::vector<int> r) { return Axis{PreferenceOrder(std::move(r))}; }

// Peak test straight from the definition: utilities along the axis rise then fall.
bool oracle_single_peaked(const oracle::Profile& p, const std::vector<int>& ax) {
  for (const auto& v : p) {
    std::vector<int> u;
    for (int a : ax) u.push_back(-oracle::position(v, a));
    std::size_t i = 1;
    while (i < u.size() && u[i] > u[i - 1]) ++i;
    while (i < u.size() && u[i] < u[i - 1]) ++i;
    if (i != u.size()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("peak counting") {
  const auto e = figure2();
  CHECK(peak_count(PreferenceOrder({0, 1, 2, 3, 4}), axis({0, 1, 2, 3, 4})) == 1);
  CHECK(peak_count(e.voter(1), axis({0, 1, 2, 3, 4})) == 1);
  CHECK(peak_count(PreferenceOrder({0, 2, 4, 1, 3}), axis({0, 1, 2, 3, 4})) == 3);
}

TEST_CASE("figure 2 axes") {
  const auto e = figure2();
  for (const auto& a : {axis({0, 1, 2, 3, 4}), axis({3, 2, 1, 0, 4})}) {
    CHECK(is_single_peaked_wrt(e, a));
    CHECK(is_single_peaked_wrt(e, a.reversed()));
  }
  const auto p = oracle::profile_of(e);
  CHECK(is_single_peaked_wrt(e, axis({0, 2, 1, 3, 4})) == oracle_single_peaked(p, {0, 2, 1, 3, 4}));
  const auto found = find_single_peaked_axis(e);
  REQUIRE(found);
  CHECK(found->order.ranking() == std::vector<int>{0, 1, 2, 3, 4});

  std::vector<std::vector<int>> expected;
  for (const auto& ax : oracle::all_orders(5)) {
    if (oracle_single_peaked(p, ax)) expected.push_back(ax);
  }
  std::vector<std::vector<int>> got;
  for (const auto& a : single_peaked_axes(e)) got.push_back(a.order.ranking());
  std::sort(got.begin(), got.end());
  CHECK(got == expected);
}

TEST_CASE("axis search on small cases") {
  const Election single(4, {PreferenceOrder({2, 0, 3, 1})});
  CHECK(find_single_peaked_axis(single));
  std::vector<PreferenceOrder> all6;
  for (const auto& o : oracle::all_orders(3)) all6.emplace_back(o);
  CHECK_FALSE(find_single_peaked_axis(Election(3, all6)));
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const int m = 2 + oracle::below(rng, 4), n = 1 + oracle::below(rng, 4);
    const auto p = oracle::random_profile(rng, m, n);
    bool any = false;
    for (const auto& ax : oracle::all_orders(m)) any = any || oracle_single_peaked(p, ax);
    CHECK(find_single_peaked_axis(oracle::election_of(m, p)).has_value() == any);
  }
}

TEST_CASE("single crossing") {
  const Election unanimous(3, {PreferenceOrder({0, 1, 2}), PreferenceOrder({0, 1, 2})});
  const std::vector<int> order{0, 1};
  const auto u = single_crossing_report(unanimous, order);
  CHECK(u.single_crossing);
  CHECK(u.max_crossings == 0);
  std::mt19937_64 rng(12);
  for (int t = 0; t < 20; ++t) {
    const auto p = oracle::random_profile(rng, 4, 2);
    CHECK(single_crossing_report(oracle::election_of(4, p), order).single_crossing);
  }
  const Election fig1(4, {PreferenceOrder({0, 1, 2, 3}), PreferenceOrder({0, 1, 3, 2}),
                          PreferenceOrder({2, 1, 0, 3})});
  const std::vector<int> ident{0, 1, 2};
  const auto r = single_crossing_report(fig1, ident);
  // Direct scan: a pair crosses once per adjacent voter pair that disagrees on it.
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      int flips = 0;
      for (int v = 0; v + 1 < 3; ++v) flips += fig1.voter(v).prefers(a, b) != fig1.voter(v + 1).prefers(a, b);
      CHECK(r.crossings[a][b] == flips);
    }
  }
}

TEST_CASE("euclidean verification") {
  const Election e(2, {PreferenceOrder({0, 1})});
  CHECK(verify_euclidean(e, {1, {{Rational(1)}, {Rational(3)}}, {{Rational(0)}}}));
  CHECK_FALSE(verify_euclidean(e, {1, {{Rational(3)}, {Rational(1)}}, {{Rational(0)}}}));
  CHECK_THROWS_AS(verify_euclidean(e, {1, {{Rational(3)}}, {{Rational(0)}}}), InputError);
  const Election one(4, {PreferenceOrder({2, 0, 3, 1})});
  EuclideanEmbedding emb{1, std::vector<std::vector<Rational>>(4), {{Rational(0)}}};
  for (int i = 0; i < 4; ++i) emb.alternatives[one.voter(0).at(i)] = {Rational(i + 1)};
  CHECK(verify_euclidean(one, emb));
}

TEST_CASE("group separability") {
  const Election unanimous(3, {PreferenceOrder({0, 1, 2})});
  CHECK(group_separable_split(unanimous));
  const Election blocks(4, {PreferenceOrder({0, 1, 2, 3}), PreferenceOrder({1, 0, 3, 2})});
  const auto s = group_separable_split(blocks);
  REQUIRE(s);
  auto first = s->first, second = s->second;
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  CHECK(((first == std::vector<int>{0, 1} && second == std::vector<int>{2, 3}) ||
         (first == std::vector<int>{2, 3} && second == std::vector<int>{0, 1})));
  // Each 2|1 split of {0,1,2} is interleaved by some voter.
  const Election interleaved(3, {PreferenceOrder({0, 1, 2}), PreferenceOrder({1, 2, 0}),
                                 PreferenceOrder({2, 0, 1})});
  CHECK_FALSE(group_separable_split(interleaved));
}

TEST_CASE("deletion distance") {
  const auto e = figure2();
  CHECK(sp_deletion_distance(e, DeletionMode::voters).distance == 0);
  CHECK(sp_deletion_distance(e, DeletionMode::alternatives).distance == 0);
  std::vector<PreferenceOrder> all6;
  for (const auto& o : oracle::all_orders(3)) all6.emplace_back(o);
  const Election cyc(3, all6);
  const auto d = sp_deletion_distance(cyc, DeletionMode::voters);
  // Oracle: smallest voter subset whose removal leaves a single-peaked profile.
  const auto p = oracle::profile_of(cyc);
  int best = 99;
  for (std::uint32_t mask = 0; mask < (1u << p.size()); ++mask) {
    oracle::Profile rest;
    for (std::size_t v = 0; v < p.size(); ++v) {
      if (!(mask >> v & 1)) rest.push_back(p[v]);
    }
    for (const auto& ax : oracle::all_orders(3)) {
      if (oracle_single_peaked(rest, ax)) best = std::min(best, std::popcount(mask));
    }
  }
  CHECK(d.distance == best);
  CHECK(static_cast<int>(d.witness.size()) == best);
}

TEST_CASE("figure 2 plus one adversarial voter") {
  auto voters = figure2().voters();
  voters.emplace_back(std::vector<int>{4, 2, 0, 1, 3});
  const Election e(5, voters);
  const auto p = oracle::profile_of(e);
  bool extra_fits_some_axis = false;
  for (const auto& ax : oracle::all_orders(5)) extra_fits_some_axis |= oracle_single_peaked(p, ax);
  CHECK_FALSE(extra_fits_some_axis);
  const auto d = sp_deletion_distance(e, DeletionMode::voters);
  CHECK(d.distance == 1);
  REQUIRE(d.witness.size() == 1);
  oracle::Profile rest = p;
  rest.erase(rest.begin() + d.witness[0]);
  bool fits = false;
  for (const auto& ax : oracle::all_orders(5)) fits |= oracle_single_peaked(rest, ax);
  CHECK(fits);
}
