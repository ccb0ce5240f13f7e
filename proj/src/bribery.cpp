#include "parasoc/bribery.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>

namespace parasoc {

namespace {

constexpr Score kInfinity = std::numeric_limits<Score>::max();

void check_p(const Election& e, Alternative p) {
  if (p < 0 || p >= e.num_alternatives()) throw InputError("preferred alternative out of range");
}

void check_rule(const Election& e, const ScoringVector& rule) {
  if (rule.size() != e.num_alternatives()) {
    throw DimensionError("scoring vector length differs from the number of alternatives");
  }
}

// points[c] contributed by one order.
std::vector<Score> points_of(const PreferenceOrder& order, const ScoringVector& rule) {
  std::vector<Score> pts(order.size());
  for (int i = 0; i < order.size(); ++i) pts[order.at(i)] = rule.values()[i];
  return pts;
}

BriberyPlan untouched_plan(const Election& e) {
  BriberyPlan plan;
  for (const auto& v : e.voters()) {
    VoterAction a;
    a.order = v;
    plan.actions.push_back(std::move(a));
  }
  plan.result = e;
  return plan;
}

void finish_plan(BriberyPlan& plan, const Election& e) {
  std::vector<PreferenceOrder> orders;
  plan.cost = 0;
  for (const auto& a : plan.actions) {
    orders.push_back(a.order);
    plan.cost = checked_add(plan.cost, a.cost);
  }
  plan.result = e.with_voters(std::move(orders));
}

// Winner test on partial scores plus optimistic bounds for the voters not yet fixed.
bool can_still_win(const std::vector<Score>& partial, const std::vector<Score>& p_gain,
                   const std::vector<Score>& rival_floor, Alternative p, WinnerMode mode) {
  const Score p_best = partial[p] + p_gain[p];
  for (std::size_t c = 0; c < partial.size(); ++c) {
    if (static_cast<Alternative>(c) == p) continue;
    const Score low = partial[c] + rival_floor[c];
    if (low > p_best || (mode == WinnerMode::unique_winner && low == p_best)) return false;
  }
  return true;
}

}  // namespace

SwapPrices::SwapPrices(std::vector<PairPrices> per_voter) : prices_(std::move(per_voter)) {
  for (const auto& mat : prices_) {
    for (std::size_t a = 0; a < mat.size(); ++a) {
      if (mat[a].size() != mat.size()) throw DimensionError("swap price matrix is not square");
      for (std::size_t b = 0; b < mat.size(); ++b) {
        if (mat[a][b] < 0) throw InputError("swap prices must be nonnegative");
        if (a != b && mat[a][b] != mat[b][a]) throw InputError("swap prices must be symmetric");
      }
    }
  }
}

SwapPrices SwapPrices::unit(int n, int m) {
  PairPrices mat(m, std::vector<Score>(m, 1));
  for (int a = 0; a < m; ++a) mat[a][a] = 0;
  return SwapPrices(std::vector<PairPrices>(n, mat));
}

ShiftPrices::ShiftPrices(std::vector<std::vector<Score>> per_voter) : costs_(std::move(per_voter)) {
  for (const auto& c : costs_) {
    if (c.empty() || c[0] != 0) throw InputError("shift price of zero positions must be 0");
    for (std::size_t t = 1; t < c.size(); ++t) {
      if (c[t] < c[t - 1]) throw InputError("shift prices must be nondecreasing");
    }
  }
}

ShiftPrices ShiftPrices::linear(const Election& e, Alternative p) {
  check_p(e, p);
  std::vector<std::vector<Score>> costs;
  for (const auto& v : e.voters()) {
    std::vector<Score> c(v.rank_of(p));
    std::iota(c.begin(), c.end(), Score{0});
    costs.push_back(std::move(c));
  }
  return ShiftPrices(std::move(costs));
}

void ShiftPrices::check_against(const Election& e, Alternative p) const {
  check_p(e, p);
  if (num_voters() != e.num_voters()) throw DimensionError("shift prices: one row per voter");
  for (int v = 0; v < e.num_voters(); ++v) {
    if (static_cast<int>(costs_[v].size()) != e.voter(v).rank_of(p)) {
      throw DimensionError("shift prices of voter " + std::to_string(v) + " need " +
                           std::to_string(e.voter(v).rank_of(p)) + " entries");
    }
  }
}

std::pair<PreferenceOrder, Score> apply_swap_sequence(const PreferenceOrder& order,
                                                      const std::vector<Swap>& sequence,
                                                      const PairPrices& prices) {
  PreferenceOrder cur = order;
  Score cost = 0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    const auto [a, b] = sequence[i];
    if (a < 0 || b < 0 || a >= cur.size() || b >= cur.size() ||
        std::abs(cur.rank_of(a) - cur.rank_of(b)) != 1) {
      throw SwapSequenceError(i, "swap " + std::to_string(i) + " (" + std::to_string(a) + "," +
                                     std::to_string(b) + ") is not an adjacent pair");
    }
    cur = cur.swapped_at(std::min(cur.rank_of(a), cur.rank_of(b)) - 1);
    cost = checked_add(cost, prices.at(a).at(b));
  }
  return {std::move(cur), cost};
}

Score min_cost_to_target(const PreferenceOrder& order, const PreferenceOrder& target,
                         const PairPrices& prices) {
  if (order.size() != target.size()) throw DimensionError("orders over different alternatives");
  Score cost = 0;
  const int m = order.size();
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) {
      if (order.prefers(a, b) != target.prefers(a, b)) cost = checked_add(cost, prices.at(a).at(b));
    }
  }
  return cost;
}

std::vector<Swap> swap_sequence_to(const PreferenceOrder& order, const PreferenceOrder& target) {
  if (order.size() != target.size()) throw DimensionError("orders over different alternatives");
  std::vector<Alternative> cur = order.ranking();
  std::vector<Swap> seq;
  const int m = order.size();
  for (int pass = 0; pass < m; ++pass) {
    for (int i = 0; i + 1 < m; ++i) {
      if (target.rank_of(cur[i]) > target.rank_of(cur[i + 1])) {
        seq.emplace_back(cur[i], cur[i + 1]);
        std::swap(cur[i], cur[i + 1]);
      }
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------
// Swap bribery

namespace {

struct Option {
  PreferenceOrder order;
  Score cost;
  std::vector<Score> points;
};

// Orders that no cheaper-or-equal order dominates (p no worse, every rival no better).
std::vector<Option> pareto_options(const PreferenceOrder& original, const ScoringVector& rule,
                                   const PairPrices& prices, Alternative p) {
  std::vector<Option> all;
  std::vector<Alternative> perm(original.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    PreferenceOrder o(perm);
    all.push_back({o, min_cost_to_target(original, o, prices), points_of(o, rule)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::stable_sort(all.begin(), all.end(),
                   [](const Option& a, const Option& b) { return a.cost < b.cost; });

  auto dominates = [&](const Option& a, const Option& b) {
    if (a.cost > b.cost || a.points[p] < b.points[p]) return false;
    for (std::size_t c = 0; c < a.points.size(); ++c) {
      if (static_cast<Alternative>(c) != p && a.points[c] > b.points[c]) return false;
    }
    return true;
  };
  std::vector<Option> kept;
  for (const auto& o : all) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (dominates(k, o)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(o);
  }
  return kept;
}

class VoterSearch {
 public:
  VoterSearch(std::vector<std::vector<Option>> options, Alternative p, WinnerMode mode, Score budget)
      : options_(std::move(options)), p_(p), mode_(mode), best_cost_(budget) {
    const std::size_t n = options_.size();
    const std::size_t m = options_.front().front().points.size();
    // Suffix bounds: best points p can still collect, fewest points each rival must still get.
    p_gain_.assign(n + 1, std::vector<Score>(m, 0));
    floor_.assign(n + 1, std::vector<Score>(m, 0));
    for (std::size_t v = n; v-- > 0;) {
      p_gain_[v] = p_gain_[v + 1];
      floor_[v] = floor_[v + 1];
      Score pmax = 0;
      std::vector<Score> low(m, kInfinity);
      for (const auto& o : options_[v]) {
        pmax = std::max(pmax, o.points[p]);
        for (std::size_t c = 0; c < m; ++c) low[c] = std::min(low[c], o.points[c]);
      }
      p_gain_[v][p] += pmax;
      for (std::size_t c = 0; c < m; ++c) floor_[v][c] += low[c];
    }
    choice_.assign(n, 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    std::vector<Score> partial(p_gain_.front().size(), 0);
    search(0, 0, partial);
    return best_;
  }

 private:
  void search(std::size_t v, Score cost, std::vector<Score>& partial) {
    if (!can_still_win(partial, p_gain_[v], floor_[v], p_, mode_)) return;
    if (v == options_.size()) {
      // Reaching a leaf means the bounds collapsed to the exact scores.
      best_cost_ = cost - 1;
      best_ = choice_;
      return;
    }
    for (std::size_t i = 0; i < options_[v].size(); ++i) {
      const auto& o = options_[v][i];
      if (cost + o.cost > best_cost_) break;  // options sorted by cost
      for (std::size_t c = 0; c < partial.size(); ++c) partial[c] += o.points[c];
      choice_[v] = i;
      search(v + 1, cost + o.cost, partial);
      for (std::size_t c = 0; c < partial.size(); ++c) partial[c] -= o.points[c];
    }
  }

  std::vector<std::vector<Option>> options_;
  Alternative p_;
  WinnerMode mode_;
  Score best_cost_;  // only plans costing at most this are still of interest
  std::vector<std::vector<Score>> p_gain_;
  std::vector<std::vector<Score>> floor_;
  std::vector<std::size_t> choice_;
  std::optional<std::vector<std::size_t>> best_;
};

}  // namespace

std::optional<BriberyPlan> swap_bribery(const Election& e, const ScoringVector& rule,
                                        WinnerMode mode, Alternative p, const SwapPrices& prices,
                                        Score budget, int max_m) {
  check_p(e, p);
  check_rule(e, rule);
  if (e.num_alternatives() > max_m) {
    throw CapacityError("swap bribery enumerates m! orders per voter; m <= " +
                        std::to_string(max_m));
  }
  if (prices.num_voters() != e.num_voters()) throw DimensionError("swap prices: one per voter");
  if (budget < 0) return std::nullopt;
  std::vector<std::vector<Option>> options;
  for (int v = 0; v < e.num_voters(); ++v) {
    if (static_cast<int>(prices.voter(v).size()) != e.num_alternatives()) {
      throw DimensionError("swap price matrix of voter " + std::to_string(v) + " has wrong size");
    }
    options.push_back(pareto_options(e.voter(v), rule, prices.voter(v), p));
  }
  const auto choice = VoterSearch(options, p, mode, budget).run();
  if (!choice) return std::nullopt;
  BriberyPlan plan = untouched_plan(e);
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& o = options[v][(*choice)[v]];
    if (o.order == e.voter(v)) continue;
    auto& a = plan.actions[v];
    a.kind = VoterAction::Kind::swaps;
    a.order = o.order;
    a.swaps = swap_sequence_to(e.voter(v), o.order);
    a.cost = o.cost;
  }
  finish_plan(plan, e);
  return plan;
}

// ---------------------------------------------------------------------------
// Shift bribery

std::optional<BriberyPlan> shift_bribery(const Election& e, const ScoringVector& rule,
                                         WinnerMode mode, Alternative p,
                                         const ShiftPrices& prices, Score budget) {
  check_rule(e, rule);
  prices.check_against(e, p);
  if (budget < 0) return std::nullopt;
  std::vector<std::vector<Option>> options;
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& order = e.voter(v);
    std::vector<Option> opts;
    PreferenceOrder cur = order;
    const int pos = order.rank_of(p) - 1;
    for (int t = 0; t <= pos; ++t) {
      if (t > 0) cur = cur.swapped_at(pos - t);
      opts.push_back({cur, prices.voter(v)[t], points_of(cur, rule)});
    }
    options.push_back(std::move(opts));
  }
  const auto choice = VoterSearch(options, p, mode, budget).run();
  if (!choice) return std::nullopt;
  BriberyPlan plan = untouched_plan(e);
  for (int v = 0; v < e.num_voters(); ++v) {
    const int t = static_cast<int>((*choice)[v]);
    if (t == 0) continue;
    auto& a = plan.actions[v];
    a.kind = VoterAction::Kind::shift;
    a.shift = t;
    a.order = options[v][t].order;
    a.cost = options[v][t].cost;
  }
  finish_plan(plan, e);
  return plan;
}

// ---------------------------------------------------------------------------
// Unit-cost and priced bribery

namespace {

// Distributes the positions 2..m of s rewritten voters (p on top of each) among the rivals so
// that no rival ends above its cap. Positions with equal points are pooled into groups.
class RewriteAssignment {
 public:
  RewriteAssignment(const ScoringVector& rule, std::vector<Alternative> rivals,
                    std::vector<Score> caps, int s)
      : rivals_(std::move(rivals)), caps_(std::move(caps)), s_(s) {
    const auto& alpha = rule.values();
    for (std::size_t pos = 1; pos < alpha.size(); ++pos) {
      if (group_points_.empty() || group_points_.back() != alpha[pos]) {
        group_points_.push_back(alpha[pos]);
        group_positions_.emplace_back();
      }
      group_positions_.back().push_back(static_cast<int>(pos));
    }
  }

  /// For each bribed voter, the new order (p first). nullopt when no assignment fits the caps.
  std::optional<std::vector<std::vector<Alternative>>> solve(Alternative p) {
    std::vector<int> remaining;
    for (const auto& g : group_positions_) remaining.push_back(static_cast<int>(g.size()) * s_);
    counts_.assign(rivals_.size(), std::vector<int>(group_points_.size(), 0));
    if (!assign(0, remaining)) return std::nullopt;
    return realize(p);
  }

 private:
  bool assign(std::size_t r, std::vector<int>& remaining) {
    if (r == rivals_.size()) return true;
    auto key = std::make_pair(r, remaining);
    if (failed_.count(key)) return false;
    std::vector<int> take(group_points_.size(), 0);
    if (compose(r, 0, s_, 0, take, remaining)) return true;
    failed_.insert(std::move(key));
    return false;
  }

  // Chooses how many of rival r's s slots fall into group g and beyond.
  bool compose(std::size_t r, std::size_t g, int left, Score points, std::vector<int>& take,
               std::vector<int>& remaining) {
    if (points > caps_[r]) return false;
    if (g == group_points_.size()) {
      if (left != 0) return false;
      counts_[r] = take;
      return assign(r + 1, remaining);
    }
    // Low-point groups sit at the end; try filling later groups first by taking few here.
    const int hi = std::min(left, remaining[g]);
    for (int t = 0; t <= hi; ++t) {
      take[g] = t;
      remaining[g] -= t;
      const bool ok = compose(r, g + 1, left - t, points + t * group_points_[g], take, remaining);
      remaining[g] += t;
      if (ok) return true;
    }
    take[g] = 0;
    return false;
  }

  std::vector<std::vector<Alternative>> realize(Alternative p) {
    const int m = static_cast<int>(rivals_.size()) + 1;
    // Spread each group's counts over its individual positions, s per position.
    std::vector<std::vector<int>> x(rivals_.size(), std::vector<int>(m, 0));
    for (std::size_t g = 0; g < group_points_.size(); ++g) {
      std::size_t slot = 0;
      int room = s_;
      for (std::size_t r = 0; r < rivals_.size(); ++r) {
        int c = counts_[r][g];
        while (c > 0) {
          const int put = std::min(c, room);
          x[r][group_positions_[g][slot]] += put;
          c -= put;
          room -= put;
          if (room == 0) {
            ++slot;
            room = s_;
          }
        }
      }
    }
    // x is s-regular between rivals and positions 1..m-1; peel off perfect matchings.
    std::vector<std::vector<Alternative>> orders;
    for (int round = 0; round < s_; ++round) {
      std::vector<int> rival_at(m, -1);
      for (std::size_t r = 0; r < rivals_.size(); ++r) {
        std::vector<char> seen(m, 0);
        augment(static_cast<int>(r), x, rival_at, seen);
      }
      std::vector<Alternative> order(m);
      order[0] = p;
      for (int pos = 1; pos < m; ++pos) {
        const int r = rival_at[pos];
        order[pos] = rivals_[r];
        --x[r][pos];
      }
      orders.push_back(std::move(order));
    }
    return orders;
  }

  bool augment(int r, const std::vector<std::vector<int>>& x, std::vector<int>& rival_at,
               std::vector<char>& seen) {
    const int m = static_cast<int>(x[r].size());
    for (int pos = 1; pos < m; ++pos) {
      if (x[r][pos] == 0 || seen[pos]) continue;
      seen[pos] = 1;
      if (rival_at[pos] < 0 || augment(rival_at[pos], x, rival_at, seen)) {
        rival_at[pos] = r;
        return true;
      }
    }
    return false;
  }

  std::vector<Alternative> rivals_;
  std::vector<Score> caps_;
  int s_;
  std::vector<Score> group_points_;
  std::vector<std::vector<int>> group_positions_;
  std::vector<std::vector<int>> counts_;
  std::set<std::pair<std::size_t, std::vector<int>>> failed_;
};

}  // namespace

std::optional<BriberyPlan> unit_or_priced_bribery(const Election& e, const ScoringVector& rule,
                                                  WinnerMode mode, Alternative p,
                                                  const BriberyBudget& budget, int max_m,
                                                  int max_n) {
  check_p(e, p);
  check_rule(e, rule);
  const int n = e.num_voters();
  const int m = e.num_alternatives();
  if (m > max_m || n > max_n) {
    throw CapacityError("bribery search limited to m <= " + std::to_string(max_m) +
                        " and n <= " + std::to_string(max_n));
  }
  std::vector<Score> price(n, 1);
  if (budget.prices) {
    if (static_cast<int>(budget.prices->size()) != n) throw DimensionError("one price per voter");
    price = *budget.prices;
    for (Score x : price) {
      if (x < 0) throw InputError("voter prices must be nonnegative");
    }
  }
  if (budget.budget < 0) return std::nullopt;

  struct Candidate {
    Score cost;
    int size;
    std::uint32_t mask;
  };
  std::vector<Candidate> candidates;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Score cost = 0;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) cost += price[v];
    }
    if (cost <= budget.budget) candidates.push_back({cost, std::popcount(mask), mask});
  }
  auto lex_less = [](std::uint32_t a, std::uint32_t b) {
    // Compare ascending index lists lexicographically.
    while (a && b) {
      const int fa = std::countr_zero(a), fb = std::countr_zero(b);
      if (fa != fb) return fa < fb;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  };
  // Cheapest first; among equals fewer voters, then lower voter indices.
  std::sort(candidates.begin(), candidates.end(), [&](const auto& a, const auto& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.size != b.size) return a.size < b.size;
    return lex_less(a.mask, b.mask);
  });

  const Score top = rule.values().front();
  for (const auto& cand : candidates) {
    std::vector<Score> base(m, 0);
    for (int v = 0; v < n; ++v) {
      if (cand.mask >> v & 1u) continue;
      const auto pts = points_of(e.voter(v), rule);
      for (int c = 0; c < m; ++c) base[c] += pts[c];
    }
    const Score p_final = base[p] + cand.size * top;
    std::vector<Alternative> rivals;
    std::vector<Score> caps;
    bool hopeless = false;
    for (Alternative c = 0; c < m; ++c) {
      if (c == p) continue;
      const Score cap = p_final - base[c] - (mode == WinnerMode::unique_winner ? 1 : 0);
      if (cap < 0) hopeless = true;
      rivals.push_back(c);
      caps.push_back(cap);
    }
    if (hopeless) continue;
    auto orders = RewriteAssignment(rule, rivals, caps, cand.size).solve(p);
    if (!orders) continue;
    BriberyPlan plan = untouched_plan(e);
    std::size_t next = 0;
    for (int v = 0; v < n; ++v) {
      if (!(cand.mask >> v & 1u)) continue;
      auto& a = plan.actions[v];
      a.kind = VoterAction::Kind::new_order;
      a.order = PreferenceOrder((*orders)[next++]);
      a.cost = price[v];
    }
    finish_plan(plan, e);
    return plan;
  }
  return std::nullopt;
}

bool validate_plan(const Election& e, const ScoringVector& rule, WinnerMode mode, Alternative p,
                   const BriberyPlan& plan) {
  if (static_cast<int>(plan.actions.size()) != e.num_voters()) return false;
  Score total = 0;
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& a = plan.actions[v];
    const auto& orig = e.voter(v);
    switch (a.kind) {
      case VoterAction::Kind::unchanged:
        if (!(a.order == orig) || a.cost != 0) return false;
        break;
      case VoterAction::Kind::new_order:
        break;
      case VoterAction::Kind::swaps: {
        PreferenceOrder cur = orig;
        for (const auto& [x, y] : a.swaps) {
          if (std::abs(cur.rank_of(x) - cur.rank_of(y)) != 1) return false;
          cur = cur.swapped_at(std::min(cur.rank_of(x), cur.rank_of(y)) - 1);
        }
        if (!(cur == a.order)) return false;
        break;
      }
      case VoterAction::Kind::shift: {
        const int pos = orig.rank_of(p) - 1;
        if (a.shift < 0 || a.shift > pos) return false;
        std::vector<Alternative> r = orig.ranking();
        std::rotate(r.begin() + (pos - a.shift), r.begin() + pos, r.begin() + pos + 1);
        if (r != a.order.ranking()) return false;
        break;
      }
    }
    total += a.cost;
    if (!(plan.result.voter(v) == a.order)) return false;
  }
  if (total != plan.cost) return false;
  return is_winner(scores(plan.result, rule), p, mode);
}

}  // namespace parasoc
