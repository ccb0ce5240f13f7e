#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "parasoc/election.hpp"
#include "parasoc/errors.hpp"

namespace parasoc {

using Swap = std::pair<Alternative, Alternative>;
/// prices[a][b] == prices[b][a]: cost of swapping adjacent a and b in one voter's order.
using PairPrices = std::vector<std::vector<Score>>;

/// Per-voter swap prices (unordered pairs).
class SwapPrices {
 public:
  explicit SwapPrices(std::vector<PairPrices> per_voter);
  static SwapPrices unit(int n, int m);

  int num_voters() const noexcept { return static_cast<int>(prices_.size()); }
  const PairPrices& voter(int v) const { return prices_.at(v); }
  Score price(int v, Alternative a, Alternative b) const { return prices_.at(v).at(a).at(b); }

 private:
  std::vector<PairPrices> prices_;
};

/// Per-voter shift prices: cost[v][t] for moving p up t positions, cost[v][0] == 0.
class ShiftPrices {
 public:
  explicit ShiftPrices(std::vector<std::vector<Score>> per_voter);
  /// cost[v][t] = t.
  static ShiftPrices linear(const Election& e, Alternative p);

  const std::vector<Score>& voter(int v) const { return costs_.at(v); }
  int num_voters() const noexcept { return static_cast<int>(costs_.size()); }
  /// Each voter needs exactly one entry per reachable shift, 0..(position of p) - 1.
  void check_against(const Election& e, Alternative p) const;

 private:
  std::vector<std::vector<Score>> costs_;
};

/// Budget for unit-cost and priced bribery. Without prices every voter costs 1.
struct BriberyBudget {
  Score budget = 0;
  std::optional<std::vector<Score>> prices;
};

struct VoterAction {
  enum class Kind { unchanged, new_order, swaps, shift };
  Kind kind = Kind::unchanged;
  PreferenceOrder order;  // the voter's order after the action
  std::vector<Swap> swaps;
  int shift = 0;
  Score cost = 0;
};

struct BriberyPlan {
  std::vector<VoterAction> actions;  // one per voter
  Score cost = 0;
  Election result;
};

/// A listed pair was not adjacent when its turn came.
class SwapSequenceError : public InputError {
 public:
  SwapSequenceError(std::size_t index, const std::string& what) : InputError(what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Applies the swaps in turn; every listed pair must be adjacent at its turn.
std::pair<PreferenceOrder, Score> apply_swap_sequence(const PreferenceOrder& order,
                                                      const std::vector<Swap>& sequence,
                                                      const PairPrices& prices);

/// Sum of prices over pairs ordered differently in `order` and `target`.
Score min_cost_to_target(const PreferenceOrder& order, const PreferenceOrder& target,
                         const PairPrices& prices);

/// Bubble sort of `order` toward `target`; swaps each discordant pair exactly once.
std::vector<Swap> swap_sequence_to(const PreferenceOrder& order, const PreferenceOrder& target);

/// Minimum-cost swap bribery with cost <= budget. Throws CapacityError when m > max_m.
std::optional<BriberyPlan> swap_bribery(const Election& e, const ScoringVector& rule,
                                        WinnerMode mode, Alternative p, const SwapPrices& prices,
                                        Score budget, int max_m = 6);

/// Minimum-cost shift bribery with cost <= budget.
std::optional<BriberyPlan> shift_bribery(const Election& e, const ScoringVector& rule,
                                         WinnerMode mode, Alternative p,
                                         const ShiftPrices& prices, Score budget);

/// Unit-cost (no prices) or priced bribery: bribed voters may be rewritten arbitrarily.
/// Minimum total price; throws CapacityError when m > max_m or n > max_n.
std::optional<BriberyPlan> unit_or_priced_bribery(const Election& e, const ScoringVector& rule,
                                                  WinnerMode mode, Alternative p,
                                                  const BriberyBudget& budget, int max_m = 6,
                                                  int max_n = 20);

/// Re-applies every action and checks cost and winner status.
bool validate_plan(const Election& e, const ScoringVector& rule, WinnerMode mode, Alternative p,
                   const BriberyPlan& plan);

}  // namespace parasoc
