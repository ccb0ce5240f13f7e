#pragma once

#include <optional>
#include <vector>

#include "parasoc/circuit.hpp"

namespace parasoc {

/// Majoritywise Accepted Ballot: proposals 0..m-1, one favourite ballot per voter, an agenda.
struct MabInstance {
  int num_proposals = 0;
  std::vector<std::vector<int>> ballots;  // ascending proposal ids
  std::vector<int> agenda;                // Q_+, ascending
};

void validate(const MabInstance& inst);

/// Voter accepts Q iff |B ∩ Q| > |Q| / 2.
bool accepts(const std::vector<int>& ballot, const std::vector<int>& q);

/// Strict majority of voters accept Q (all voters when `unanimous`).
bool society_accepts(const MabInstance& inst, const std::vector<int>& q, bool unanimous = false);

/// Smallest, then lexicographically first, Q with agenda ⊆ Q accepted by the society.
/// With `size`, only |Q| == size is considered (requires |agenda| <= size <= m).
/// Throws CapacityError when m > max_m.
std::optional<std::vector<int>> mab_solve(const MabInstance& inst, std::optional<int> size,
                                          bool unanimous = false, int max_m = 20);

/// Circuit over variables x_p (p = proposal id) whose weight-k satisfying assignments are exactly
/// the accepted ballots of size k. Each voter is a MAJ gate over its ballot's variables padded with
/// constants so that it fires iff at least floor(k/2)+1 of them are true; an outer MAJ (ANDBIG when
/// `unanimous`) combines the voters and a chain of AND2 gates enforces the agenda.
Circuit mab_to_majority_circuit(const MabInstance& inst, int k, bool unanimous = false);

}  // namespace parasoc
