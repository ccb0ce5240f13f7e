#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parasoc/election.hpp"

namespace parasoc {

/// d-Approval view of an election: every voter approves its top d alternatives.
struct ApprovalView {
  int d = 0;
  std::vector<std::uint64_t> approves;  // bitmask over alternatives, one per voter
  std::vector<Score> score;             // s(c)
};

/// Throws InputError unless 1 <= d < m; CapacityError when m > 64.
ApprovalView approval_view(const Election& e, int d);

/// Constructive control by deleting at most k voters under d-Approval.
struct ControlInstance {
  Election election;
  int d = 1;
  Alternative p = 0;
  int k = 0;
  WinnerMode mode = WinnerMode::co_winner;
};

void validate(const ControlInstance& inst);

/// Voters of V_R (or V_p) sharing the same approved subset of R.
struct VoterClass {
  std::uint64_t relevant_mask = 0;  // approved members of R
  bool approves_p = false;
  std::vector<int> voters;          // ascending
};

struct RelevanceSplit {
  std::vector<Alternative> irrelevant;  // I
  std::vector<Alternative> relevant;    // R
  std::vector<int> voters_p;            // V_p
  std::vector<int> voters_r;            // V_R
  /// Classes of V_p and V_R, ordered by their smallest voter index.
  std::vector<VoterClass> classes;
};

/// Irrelevant alternatives can never beat p once only non-approvers of p are deleted:
/// s(c) < s(p) in unique-winner mode, s(c) <= s(p) in co-winner mode.
RelevanceSplit relevance_split(const Election& e, int d, Alternative p,
                               WinnerMode mode = WinnerMode::co_winner);

/// Drops voters that approve only irrelevant alternatives. Recomputes the split until stable.
Election reduce_instance(const Election& e, int d, Alternative p,
                         WinnerMode mode = WinnerMode::co_winner);

/// Whether p wins the d-Approval election after deleting `deleted` (which must leave a voter).
bool wins_after_deletion(const ControlInstance& inst, const std::vector<int>& deleted);

/// Fixed-parameter algorithm in k: rejects when |R| > d*k, otherwise guesses how many voters
/// to delete from each class of V_R. Returns ascending voter indices, or nullopt.
std::optional<std::vector<int>> ccdv_fpt(const ControlInstance& inst);

/// Exhaustive search over all deletion sets of size <= k, smallest first, then lexicographic.
/// Throws CapacityError when more than `max_subsets` sets would be examined.
std::optional<std::vector<int>> ccdv_bruteforce(const ControlInstance& inst,
                                                std::int64_t max_subsets = 5'000'000);

}  // namespace parasoc
