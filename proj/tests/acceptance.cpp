// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "parasoc/bribery.hpp"
#include "parasoc/cake.hpp"
#include "parasoc/circuit.hpp"
#include "parasoc/control.hpp"
#include "parasoc/dodgson.hpp"
#include "parasoc/election.hpp"
#include "parasoc/kemeny.hpp"
#include "parasoc/mab.hpp"
#include "parasoc/structure.hpp"
#include "support/densities.hpp"
#include "support/oracles.hpp"

using namespace parasoc;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond && ok) detail << what;
    ok = ok && cond;
  }
};

Election figure1() {
  return Election(4, {PreferenceOrder({0, 1, 2, 3}), PreferenceOrder({0, 1, 3, 2}),
                      PreferenceOrder({2, 1, 0, 3})});
}

Election figure2() {
  return Election(5, {PreferenceOrder({0, 1, 2, 3, 4}), PreferenceOrder({2, 3, 1, 0, 4}),
                      PreferenceOrder({2, 1, 0, 3, 4})});
}

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

// --- 1 ---------------------------------------------------------------------
void figure1_golden(Check& c) {
  const auto e = figure1();
  for (const auto& [name, r] : {std::pair{"dp", kemeny_dp(e)}, std::pair{"brute", kemeny_brute_force(e)}}) {
    c.expect(r.score == 4, std::string(name) + " score " + std::to_string(r.score));
    c.expect(r.ranking.ranking() == std::vector<int>{0, 1, 2, 3}, std::string(name) + " ranking");
  }
}

// --- 2 ---------------------------------------------------------------------
void figure2_golden(Check& c) {
  const auto e = figure2();
  for (const auto& ax : {std::vector<int>{0, 1, 2, 3, 4}, std::vector<int>{3, 2, 1, 0, 4}}) {
    const Axis a{PreferenceOrder(ax)};
    c.expect(is_single_peaked_wrt(e, a), "caption axis rejected");
    c.expect(is_single_peaked_wrt(e, a.reversed()), "reversed caption axis rejected");
  }
  const auto p = oracle::profile_of(e);
  std::vector<std::vector<int>> expected, got;
  for (const auto& ax : oracle::all_orders(5)) {
    if (oracle_single_peaked(p, ax)) expected.push_back(ax);
  }
  for (const auto& a : single_peaked_axes(e)) got.push_back(a.order.ranking());
  std::sort(got.begin(), got.end());
  c.expect(got == expected, "axis set differs from exhaustive enumeration");
  c.detail << expected.size() << " valid axes of 120";
}

// --- 3 ---------------------------------------------------------------------
void kemeny_equivalence(Check& c) {
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 1 + oracle::below(rng, 7), n = 1 + oracle::below(rng, 9);
    const auto e = oracle::election_of(m, oracle::random_profile(rng, m, n));
    const bool same = kemeny_dp(e).score == kemeny_brute_force(e).score;
    c.expect(same, "seed " + std::to_string(seed) + " disagrees; ");
    agree += same;
  }
  c.detail << agree << "/200 agree";
}

// --- 4 ---------------------------------------------------------------------
void dodgson_validity(Check& c) {
  int agree = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 1 + oracle::below(rng, 4), n = 1 + oracle::below(rng, 4);
    const auto e = oracle::election_of(m, oracle::random_profile(rng, m, n));
    const int target = oracle::below(rng, m);
    const int cap = n * m * (m - 1) / 2;
    const auto score = dodgson_score(e, target);
    const auto brute = dodgson_bruteforce(e, target, cap, DodgsonBruteForceLimits{16, cap});
    const bool same = score.feasible && brute && score.score == *brute;
    const bool cw = (score.score == 0) == (condorcet_winner(e) == target);
    c.expect(same, "seed " + std::to_string(seed) + " score mismatch; ");
    c.expect(cw, "seed " + std::to_string(seed) + " Condorcet property; ");
    agree += same && cw;
  }
  c.detail << agree << "/300 agree";
}

// --- 5 ---------------------------------------------------------------------
void ccdv_soundness(Check& c) {
  int agree = 0, pretests = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 2 + oracle::below(rng, 7), n = 1 + oracle::below(rng, 12);
    const int d = 1 + oracle::below(rng, std::min(3, m - 1));
    const int k = std::min(n, oracle::below(rng, 4));
    const int p = oracle::below(rng, m);
    const auto mode = oracle::below(rng, 2) ? WinnerMode::unique_winner : WinnerMode::co_winner;
    const auto e = oracle::election_of(m, oracle::random_profile(rng, m, n));
    const ControlInstance inst{e, d, p, k, mode};
    const bool truth = ccdv_bruteforce(inst).has_value();
    const bool fpt = ccdv_fpt(inst).has_value();
    const Election reduced = reduce_instance(e, d, p, mode);
    const ControlInstance rinst{reduced, d, p, std::min(k, reduced.num_voters()), mode};
    const bool after = ccdv_bruteforce(rinst).has_value();
    const auto split = relevance_split(e, d, p, mode);
    const bool pretest_no = static_cast<int>(split.relevant.size()) > d * k;
    pretests += pretest_no;
    const std::string tag = "seed " + std::to_string(seed);
    c.expect(fpt == truth, tag + " fpt disagrees; ");
    c.expect(after == truth, tag + " reduction changes the answer; ");
    c.expect(!(pretest_no && truth), tag + " pretest contradicts oracle; ");
    agree += fpt == truth && after == truth && !(pretest_no && truth);
  }
  c.detail << agree << "/300 sound, pretest fired on " << pretests;
}

// --- 6 ---------------------------------------------------------------------
using Solver = std::function<std::optional<Score>(Score)>;

bool monotone(const Solver& solve, Score max_budget) {
  std::optional<Score> prev;
  for (Score b = 0; b <= max_budget; ++b) {
    const auto cur = solve(b);
    if (cur && *cur > b) return false;
    if (prev && (!cur || *cur > *prev)) return false;
    prev = cur;
  }
  return true;
}

std::vector<PairPrices> random_pair_prices(std::mt19937_64& rng, int n, int m, int max_price) {
  std::vector<PairPrices> out;
  for (int v = 0; v < n; ++v) {
    PairPrices pp(m, std::vector<Score>(m, 0));
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) pp[a][b] = pp[b][a] = 1 + oracle::below(rng, max_price);
    }
    out.push_back(std::move(pp));
  }
  return out;
}

ScoringVector random_rule(std::mt19937_64& rng, int m) {
  switch (oracle::below(rng, 3)) {
    case 0: return ScoringVector::plurality(m);
    case 1: return ScoringVector::borda(m);
    default: return ScoringVector::approval(m, 1 + oracle::below(rng, m));
  }
}

void bribery_suite(Check& c) {
  const std::array<std::string, 4> flavors{"unit", "priced", "swap", "shift"};
  std::array<int, 4> good{};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 2 + oracle::below(rng, 4), n = 1 + oracle::below(rng, 6);
    const auto e = oracle::election_of(m, oracle::random_profile(rng, m, n));
    const auto rule = random_rule(rng, m);
    const auto mode = oracle::below(rng, 2) ? WinnerMode::unique_winner : WinnerMode::co_winner;
    const int p = oracle::below(rng, m);
    std::vector<Score> price(n);
    for (auto& x : price) x = 1 + oracle::below(rng, 4);
    const SwapPrices swap_prices(random_pair_prices(rng, n, m, 3));
    const auto cost_of = [](const std::optional<BriberyPlan>& plan) {
      return plan ? std::optional<Score>(plan->cost) : std::nullopt;
    };
    const std::array<Solver, 4> solvers{
        [&](Score b) { return cost_of(unit_or_priced_bribery(e, rule, mode, p, {b, std::nullopt})); },
        [&](Score b) { return cost_of(unit_or_priced_bribery(e, rule, mode, p, {b, price})); },
        [&](Score b) { return cost_of(swap_bribery(e, rule, mode, p, swap_prices, b)); },
        [&](Score b) { return cost_of(shift_bribery(e, rule, mode, p, ShiftPrices::linear(e, p), b)); },
    };
    for (std::size_t f = 0; f < 4; ++f) {
      const bool ok = monotone(solvers[f], 12);
      c.expect(ok, flavors[f] + " not monotone at seed " + std::to_string(seed) + "; ");
      good[f] += ok;
    }
  }

  int joint = 0;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    std::mt19937_64 rng(1000 + seed);
    const int m = 2 + oracle::below(rng, 3), n = 1 + oracle::below(rng, 4);
    const auto prof = oracle::random_profile(rng, m, n);
    const auto e = oracle::election_of(m, prof);
    const auto prices = random_pair_prices(rng, n, m, 3);
    const auto rule = random_rule(rng, m);
    const bool unique = oracle::below(rng, 2) == 1;
    const int p = oracle::below(rng, m);
    const Score budget = oracle::below(rng, 10);
    const auto plan = swap_bribery(e, rule, unique ? WinnerMode::unique_winner : WinnerMode::co_winner, p,
                                   SwapPrices(prices), budget);
    const auto expected = oracle::swap_bribery_joint(m, prof, rule.values(), unique, p, prices, budget);
    const bool same = plan.has_value() == expected.has_value() && (!plan || plan->cost == *expected);
    c.expect(same, "swap bribery differs from joint oracle at seed " + std::to_string(seed) + "; ");
    joint += same;
  }

  int pairs = 0, pair_ok = 0;
  const auto orders = oracle::all_orders(4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    std::mt19937_64 rng(5000 + seed);
    const auto prices = random_pair_prices(rng, 1, 4, 9)[0];
    for (const auto& a : orders) {
      for (const auto& b : orders) {
        const bool same =
            min_cost_to_target(PreferenceOrder(a), PreferenceOrder(b), prices) == oracle::swap_distance(a, b, prices);
        ++pairs;
        pair_ok += same;
      }
    }
  }
  c.expect(pair_ok == pairs, "min_cost_to_target differs from Dijkstra; ");
  c.detail << "monotone unit " << good[0] << " priced " << good[1] << " swap " << good[2] << " shift "
           << good[3] << " of 200; joint " << joint << "/40; pairs " << pair_ok << "/" << pairs;
}

// --- 7 ---------------------------------------------------------------------
Circuit random_circuit(std::mt19937_64& rng, int vars, int gates) {
  Circuit circ;
  for (int i = 0; i < vars; ++i) circ.add_input();
  static const GateKind kinds[] = {GateKind::negation, GateKind::and2,    GateKind::or2,
                                   GateKind::and_big,  GateKind::or_big, GateKind::majority};
  for (int g = 0; g < gates; ++g) {
    const GateKind k = kinds[oracle::below(rng, 6)];
    int fan = 1;
    if (k == GateKind::and2 || k == GateKind::or2) fan = 2;
    if (is_large(k)) fan = 1 + oracle::below(rng, 5);
    std::vector<int> in;
    for (int i = 0; i < fan; ++i) in.push_back(oracle::below(rng, circ.num_gates()));
    circ.add_gate(k, in);
  }
  circ.set_output(circ.num_gates() - 1);
  return circ;
}

void wcs_mab(Check& c) {
  int wcs_ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    const int vars = 1 + oracle::below(rng, 14);
    const auto circ = random_circuit(rng, vars, 1 + oracle::below(rng, 20));
    const int k = oracle::below(rng, vars + 1);
    const bool same = wcs_solve(circ, k) == oracle::wcs_truth_table(circ, k);
    c.expect(same, "wcs differs at seed " + std::to_string(seed) + "; ");
    wcs_ok += same;
  }

  int instances = 0, mab_ok = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed);
    MabInstance inst;
    inst.num_proposals = 1 + oracle::below(rng, 10);
    const int n = 1 + oracle::below(rng, 5);
    for (int v = 0; v < n; ++v) {
      std::vector<int> b;
      for (int x = 0; x < inst.num_proposals; ++x) {
        if (oracle::below(rng, 2)) b.push_back(x);
      }
      inst.ballots.push_back(b);
    }
    if (oracle::below(rng, 3) == 0) inst.agenda.push_back(oracle::below(rng, inst.num_proposals));
    const bool unanimous = oracle::below(rng, 4) == 0;
    for (int k = 1; k <= std::min(4, inst.num_proposals); ++k) {
      ++instances;
      const auto circ = mab_to_majority_circuit(inst, k, unanimous);
      bool same = true;
      for (std::uint32_t q = 0; q < (1u << inst.num_proposals); ++q) {
        if (std::popcount(q) != k) continue;
        std::vector<int> set;
        for (int x = 0; x < inst.num_proposals; ++x) {
          if (q >> x & 1) set.push_back(x);
        }
        bool has_agenda = true;
        for (int a : inst.agenda) has_agenda = has_agenda && (q >> a & 1);
        same = same && (has_agenda && society_accepts(inst, set, unanimous)) == evaluate_set(circ, set);
      }
      same = same && mab_solve(inst, k, unanimous).has_value() == wcs_solve(circ, k).has_value();
      c.expect(same, "encoding differs at seed " + std::to_string(seed) + "; ");
      mab_ok += same;
    }
  }

  // Hand-computed fixtures: (weft, depth).
  int fixtures = 0;
  {
    Circuit a;
    const int x = a.add_input(), y = a.add_input();
    a.set_output(a.add_gate(GateKind::and2, {x, y}));
    fixtures += metrics(a).weft == 0 && metrics(a).depth == 1;
  }
  {
    Circuit o;
    std::vector<int> xs;
    for (int i = 0; i < 4; ++i) xs.push_back(o.add_input());
    o.set_output(o.add_gate(GateKind::or_big, xs));
    fixtures += metrics(o).weft == 1 && metrics(o).depth == 1;
  }
  {
    Circuit m;
    std::vector<int> xs, ands;
    for (int i = 0; i < 6; ++i) xs.push_back(m.add_input());
    for (int i = 0; i < 3; ++i) ands.push_back(m.add_gate(GateKind::and_big, {xs[2 * i], xs[2 * i + 1]}));
    const int maj = m.add_gate(GateKind::majority, ands);
    m.set_output(m.add_gate(GateKind::negation, {maj}));
    fixtures += metrics(m).weft == 2 && metrics(m).depth == 3;
  }
  c.expect(fixtures == 3, "metric fixtures; ");
  c.detail << "wcs " << wcs_ok << "/100, encoding " << mab_ok << "/" << instances << ", fixtures " << fixtures << "/3";
}

// --- 8 ---------------------------------------------------------------------
void cake_suite(Check& c) {
  const Rational eps = Rational(1, 1'000'000'000);
  const auto abs_diff = [](const Rational& a, const Rational& b) { return a > b ? a - b : b - a; };
  int exact_ok = 0;
  std::mt19937_64 rng(8);
  for (int t = 0; t < 40; ++t) {
    const auto f = densities::random_density(rng, t % 2);
    const Piece a({{Rational(0), Rational(1, 5)}}), b({{Rational(1, 5), Rational(2, 3)}}),
        ab({{Rational(0), Rational(1, 5)}, {Rational(1, 5), Rational(2, 3)}});
    const bool ok = measure(f, Piece::whole()) == 1 && measure(f, ab) == measure(f, a) + measure(f, b) &&
                    measure(f, Piece()) == 0;
    c.expect(ok, "normalization or additivity; ");
    exact_ok += ok;
  }

  int cuts = 0, cut_ok = 0;
  for (int t = 0; t < 200; ++t) {
    const auto f = densities::random_density(rng, t % 2);
    const Rational a(static_cast<long>(rng() % 20), 20);
    const Rational v = f.integral(a, Rational(1)) * Rational(static_cast<long>(rng() % 101), 100);
    const auto r = cut_query(f, a, v);
    ++cuts;
    const bool ok = abs_diff(f.integral(a, r.x), v) <= cut_tolerance();
    c.expect(ok, "cut round trip; ");
    cut_ok += ok;
  }

  int envy_ok = 0, prop_ok = 0;
  for (int t = 0; t < 100; ++t) {
    const auto pair = densities::random_profile(rng, 2);
    const auto rep = check_fairness(cut_and_choose(pair), pair);
    bool ok = true;
    for (int p = 0; p < 2; ++p) {
      for (int q = 0; q < 2; ++q) ok = ok && rep.values[p][p] + eps >= rep.values[p][q];
    }
    c.expect(ok, "cut-and-choose envy; ");
    envy_ok += ok;

    const int n = 2 + static_cast<int>(rng() % 5);
    const auto many = densities::random_profile(rng, n);
    const auto div = last_diminisher(many);
    const auto mrep = check_fairness(div, many);
    bool prop = true;
    for (int p = 0; p < n; ++p) prop = prop && mrep.values[p][p] + eps >= Rational(1, n);
    c.expect(prop, "last-diminisher proportionality; ");
    prop_ok += prop;
  }
  c.detail << "exact " << exact_ok << "/40, cuts " << cut_ok << "/" << cuts << ", envy-free " << envy_ok
           << "/100, proportional " << prop_ok << "/100";
}

// --- 9 ---------------------------------------------------------------------
void condorcet_consistency(Check& c) {
  int with_cw = 0, violations = 0;
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    std::mt19937_64 rng(seed);
    const int m = 1 + oracle::below(rng, 6), n = 1 + oracle::below(rng, 9);
    const auto p = oracle::random_profile(rng, m, n);
    const auto cw = oracle::condorcet(m, p);
    if (!cw) continue;
    ++with_cw;
    const auto all = oracle::kemeny_all(m, p);
    for (const auto& r : all.optimal) violations += r.front() != *cw;
    violations += kemeny_dp(oracle::election_of(m, p)).ranking.top() != *cw;
  }
  c.expect(violations == 0, std::to_string(violations) + " counterexamples; ");
  c.detail << with_cw << " elections with a Condorcet winner, " << violations << " counterexamples";
}

// --- 10 --------------------------------------------------------------------
struct Capture {
  int code = -1;
  std::string out;
};

Capture run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + PARASOC_CLI_PATH + "\" " + args + " 2>/dev/null";
  Capture cap;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return cap;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) cap.out.append(buf.data(), got);
  const int status = pclose(pipe);
  cap.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return cap;
}

void determinism(Check& c) {
  const auto dir = std::filesystem::temp_directory_path() / "parasoc_acceptance";
  std::filesystem::create_directories(dir);
  const std::string data = PARASOC_TEST_DATA;
  std::vector<std::string> invocations;
  for (const std::string model : {"impartial-culture", "single-peaked", "euclidean-1d"}) {
    for (int seed : {1, 7, 42}) {
      const std::string gen = "gen --model " + model + " --m 5 --n 6 --seed " + std::to_string(seed);
      invocations.push_back(gen);
      const auto g = run_cli(gen);
      const auto file = (dir / (model + "_" + std::to_string(seed) + ".json")).string();
      std::ofstream(file) << g.out;
      const std::string in = " --seed " + std::to_string(seed) + " --in " + file;
      invocations.push_back("winners --rule borda" + in);
      invocations.push_back("kemeny --stats" + in);
      invocations.push_back("dodgson" + in);
      invocations.push_back("ccdv --d 2 --target 1 --budget 2" + in);
      invocations.push_back("bribe --flavor unit --target 2 --budget 2" + in);
      invocations.push_back("bribe --flavor swap --rule borda --target 2 --budget 4 --limit-m 5" + in);
      invocations.push_back("bribe --flavor shift --rule borda --target 2 --budget 4" + in);
      invocations.push_back("structure" + in);
    }
  }
  invocations.push_back("mab --seed 3 --in " + data + "/referenda.mab");
  invocations.push_back("mab --seed 3 --size 3 --encode --in " + data + "/referenda.mab");
  invocations.push_back("wcs --seed 3 --k 2 --in " + data + "/circuit.txt");
  invocations.push_back("cake --seed 3 --in " + data + "/cake.txt");
  invocations.push_back("cake --seed 3 --cut-from 1/3 --value 1/5 --player 1 --in " + data + "/cake.txt");
  int identical = 0;
  for (const auto& args : invocations) {
    const auto first = run_cli(args), second = run_cli(args);
    const bool ok = first.code >= 0 && first.code <= 1 && !first.out.empty() && first.out == second.out &&
                    first.code == second.code;
    c.expect(ok, "'" + args + "' not reproducible or failed; ");
    identical += ok;
  }
  c.detail << identical << "/" << invocations.size() << " invocations byte-identical";
}

}  // namespace

int main(int argc, char** argv) {
  // Optional argument: run only criterion N (1-based).
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria = {
      {"figure 1 golden (Kemeny score 4, ranking a1>a2>a3>a4)", figure1_golden, 1},
      {"figure 2 golden (single-peaked axes)", figure2_golden, 1},
      {"Kemeny DP equals brute force on 200 elections", kemeny_equivalence, 60},
      {"Dodgson program equals swap search on 300 elections", dodgson_validity, 300},
      {"CCDV soundness on 300 instances", ccdv_soundness, 300},
      {"bribery suite", bribery_suite, 600},
      {"WCS and MAB cross-validation", wcs_mab, 300},
      {"cake suite", cake_suite, 120},
      {"Condorcet consistency of Kemeny over 500 seeds", condorcet_consistency, 120},
      {"CLI determinism", determinism, 600},
  };
  int failed = 0;
  int ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    ++ran;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].run(check);
    } catch (const std::exception& e) {
      check.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.expect(secs < criteria[i].limit_seconds, " time limit exceeded");
    failed += !check.ok;
    std::printf("[%s] %2zu. %s | %.3f s (limit %.0f s) | %s\n", check.ok ? "PASS" : "FAIL", i + 1,
                criteria[i].name, secs, criteria[i].limit_seconds, check.detail.str().c_str());
    std::fflush(stdout);
  }
  if (ran == 0) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  std::printf("%d/%d criteria passed\n", ran - failed, ran);
  return failed == 0 ? 0 : 1;
}
