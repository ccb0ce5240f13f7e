#pragma once

#include <cstdint>

#include "parasoc/election.hpp"

namespace parasoc {

struct KemenyResult {
  PreferenceOrder ranking;
  std::int64_t score = 0;  // total inversions against all voters
};

/// Sum of kendall_tau(ranking, v) over all voters.
std::int64_t kemeny_score_of(const Election& e, const PreferenceOrder& ranking);

/// Enumerates all m! rankings. Ties go to the lexicographically smallest ranking.
/// Throws CapacityError when m > max_m.
KemenyResult kemeny_brute_force(const Election& e, int max_m = 8);

/// Subset dynamic program in O(2^m * m^2) after an O(n * m^2) tally.
/// Returns the same ranking as kemeny_brute_force. Throws CapacityError when m > max_m (at most 24).
KemenyResult kemeny_dp(const Election& e, int max_m = 24);

/// True iff the optimal Kemeny score is at most k.
bool kemeny_decision(const Election& e, std::int64_t k);

/// ceil(sum of pairwise voter distances / number of voter pairs); 0 for a single voter.
std::int64_t avg_pairwise_distance(const Election& e);

}  // namespace parasoc
