#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "parasoc/election.hpp"

namespace parasoc {

/// One distinct preference order together with how many voters cast it.
struct PreferenceType {
  PreferenceOrder order;
  int multiplicity = 0;  // N_i
  int index = 0;
  /// max lift: how far the target can move up in this order (its 1-based position minus 1).
  int max_lift = 0;
};

/// The Bartholdi-Tovey-Trick integer program for the Dodgson score of one target.
///
///   min  sum_{i,j} j * x_{i,j}
///   s.t. sum_j x_{i,j} = N_i                      for every type i
///        sum_{i,j} e_{i,j,y} * x_{i,j} >= d_y     for every opponent y
///        x_{i,j} >= 0
struct DodgsonProgram {
  Alternative target = 0;
  int num_voters = 0;
  std::vector<PreferenceType> types;
  /// gains[i][j][y] = e_{i,j,y}: 1 iff lifting the target by j positions in type i puts it above y.
  std::vector<std::vector<std::vector<std::uint8_t>>> gains;
  /// deficits[y] = d_y; deficits[target] = 0.
  std::vector<int> deficits;
};

struct DodgsonSolution {
  bool feasible = false;
  std::int64_t score = 0;
  /// lifts[i][j] = x_{i,j}, j = 0..max_lift of type i; x_{i,0} counts untouched voters.
  std::vector<std::vector<int>> lifts;
};

/// Groups equal orders (first appearance order) and tabulates gains and deficits.
DodgsonProgram build_program(const Election& e, Alternative target);

/// Checks every constraint of the program. Returns false with no detail on violation.
bool satisfies(const DodgsonProgram& program, const DodgsonSolution& solution);

/// Optimal program value by depth-first branch and bound.
DodgsonSolution solve_program(const DodgsonProgram& program);

/// Dodgson score of `target` with an optimal lift assignment as witness.
DodgsonSolution dodgson_score(const Election& e, Alternative target);

bool dodgson_decision(const Election& e, Alternative target, std::int64_t k);

struct DodgsonBruteForceLimits {
  int max_cells = 16;  // n * m
  int max_k = 8;
};

/// Breadth-first search over profiles reachable by adjacent swaps anywhere in any voter.
/// Returns the fewest swaps making `target` the Condorcet winner, or nullopt when more than
/// `k_cap` are needed. Throws CapacityError outside `limits`.
std::optional<int> dodgson_bruteforce(const Election& e, Alternative target, int k_cap,
                                      DodgsonBruteForceLimits limits = {});

}  // namespace parasoc
