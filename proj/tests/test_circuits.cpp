#include "doctest.h"
#include "parasoc/circuit.hpp"
#include "parasoc/errors.hpp"
#include "parasoc/mab.hpp"
#include "support/oracles.hpp"

using namespace parasoc;

namespace {

Circuit random_circuit(std::mt19937_64& rng, int vars, int gates) {
  Circuit c;
  for (int i = 0; i < vars; ++i) c.add_input();
  static const GateKind kinds[] = {GateKind::negation, GateKind::and2,    GateKind::or2,
                                   GateKind::and_big,  GateKind::or_big, GateKind::majority};
  for (int g = 0; g < gates; ++g) {
    const GateKind k = kinds[oracle::below(rng, 6)];
    const int have = c.num_gates();
    int fan = 1;
    if (k == GateKind::and2 || k == GateKind::or2) fan = 2;
    if (is_large(k)) fan = 1 + oracle::below(rng, 4);
    std::vector<int> in;
    for (int i = 0; i < fan; ++i) in.push_back(oracle::below(rng, have));
    c.add_gate(k, in);
  }
  c.set_output(c.num_gates() - 1);
  return c;
}

}  // namespace

TEST_CASE("gate semantics") {
  Circuit c;
  const int x = c.add_input();
  c.set_output(x);
  CHECK(evaluate_set(c, std::vector<int>{0}));
  CHECK_FALSE(evaluate_set(c, std::vector<int>{}));

  Circuit maj;
  std::vector<int> ins;
  for (int i = 0; i < 3; ++i) ins.push_back(maj.add_input());
  maj.set_output(maj.add_gate(GateKind::majority, ins));
  CHECK(evaluate_set(maj, std::vector<int>{0, 1}));
  CHECK_FALSE(evaluate_set(maj, std::vector<int>{0}));

  CHECK_THROWS_AS(maj.add_gate(GateKind::and_big, {}), InputError);
  CHECK_THROWS_AS(maj.add_gate(GateKind::and2, {0, 7}), InputError);
  CHECK_THROWS_AS(maj.add_gate(GateKind::negation, {0, 1}), InputError);
}

TEST_CASE("weft and depth fixtures") {
  Circuit a;
  const int x = a.add_input(), y = a.add_input();
  a.set_output(a.add_gate(GateKind::and2, {x, y}));
  CHECK(metrics(a).weft == 0);
  CHECK(metrics(a).depth == 1);

  Circuit o;
  std::vector<int> vs;
  for (int i = 0; i < 5; ++i) vs.push_back(o.add_input());
  o.set_output(o.add_gate(GateKind::or_big, vs));
  CHECK(metrics(o).weft == 1);
  CHECK(metrics(o).depth == 1);

  Circuit m;
  std::vector<int> xs, ands;
  for (int i = 0; i < 6; ++i) xs.push_back(m.add_input());
  for (int i = 0; i < 3; ++i) ands.push_back(m.add_gate(GateKind::and_big, {xs[2 * i], xs[2 * i + 1]}));
  m.set_output(m.add_gate(GateKind::majority, ands));
  CHECK(metrics(m).weft == 2);
  CHECK(metrics(m).depth == 2);
}

TEST_CASE("weighted satisfiability") {
  Circuit o;
  std::vector<int> vs;
  for (int i = 0; i < 4; ++i) vs.push_back(o.add_input());
  o.set_output(o.add_gate(GateKind::or_big, vs));
  CHECK(wcs_solve(o, 1) == std::vector<int>{0});

  Circuit a;
  vs.clear();
  for (int i = 0; i < 4; ++i) vs.push_back(a.add_input());
  a.set_output(a.add_gate(GateKind::and_big, vs));
  CHECK_FALSE(wcs_solve(a, 3));
  CHECK(wcs_solve(a, 4) == std::vector<int>{0, 1, 2, 3});

  std::mt19937_64 rng(5);
  for (int t = 0; t < 60; ++t) {
    const int vars = 1 + oracle::below(rng, 10);
    const Circuit c = random_circuit(rng, vars, 1 + oracle::below(rng, 12));
    const int k = oracle::below(rng, vars + 1);
    CHECK(wcs_solve(c, k) == oracle::wcs_truth_table(c, k));
  }
}

TEST_CASE("referendum acceptance") {
  MabInstance one{1, {{0}}, {}};
  CHECK(mab_solve(one, std::nullopt) == std::vector<int>{0});
  MabInstance empty{3, {{}, {}}, {}};
  CHECK_FALSE(mab_solve(empty, std::nullopt));
  CHECK_THROWS_AS(validate(MabInstance{2, {{1, 0}}, {}}), InputError);
  CHECK_THROWS_AS(validate(MabInstance{2, {}, {}}), InputError);
  CHECK(accepts({0, 1}, {0, 1, 2}));
  CHECK_FALSE(accepts({0}, {0, 1}));
}

TEST_CASE("referendum solver agrees with subset enumeration") {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 100; ++t) {
    MabInstance inst;
    inst.num_proposals = 1 + oracle::below(rng, 10);
    const int n = 1 + oracle::below(rng, 7);
    for (int v = 0; v < n; ++v) {
      std::vector<int> b;
      for (int p = 0; p < inst.num_proposals; ++p) {
        if (oracle::below(rng, 2)) b.push_back(p);
      }
      inst.ballots.push_back(b);
    }
    if (oracle::below(rng, 3) == 0) inst.agenda.push_back(oracle::below(rng, inst.num_proposals));
    const bool unanimous = oracle::below(rng, 4) == 0;
    std::optional<int> size;
    if (oracle::below(rng, 2)) size = 1 + oracle::below(rng, inst.num_proposals);
    CHECK(mab_solve(inst, size, unanimous) == oracle::mab_enumerate(inst, size, unanimous));
  }
}

TEST_CASE("majority-circuit encoding") {
  MabInstance single{3, {{1}}, {}};
  CHECK(wcs_solve(mab_to_majority_circuit(single, 1), 1).has_value());
  MabInstance blank{3, {{}}, {}};
  CHECK_FALSE(wcs_solve(mab_to_majority_circuit(blank, 1), 1).has_value());
  MabInstance agenda{4, {{0, 1}, {1, 2}}, {0, 2, 3}};
  CHECK_FALSE(wcs_solve(mab_to_majority_circuit(agenda, 2), 2).has_value());
}
