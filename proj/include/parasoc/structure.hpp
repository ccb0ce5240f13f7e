#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "parasoc/election.hpp"
#include "parasoc/rational.hpp"

namespace parasoc {

/// A societal left-to-right order of the alternatives.
struct Axis {
  PreferenceOrder order;

  int position(Alternative a) const { return order.rank_of(a) - 1; }
  Axis reversed() const { return {order.reversed()}; }
  friend bool operator==(const Axis&, const Axis&) = default;
};

/// Number of maximal rising streaks of the voter's utility read along the axis.
/// A strictly decreasing sequence counts as one peak.
int peak_count(const PreferenceOrder& order, const Axis& axis);

bool is_single_peaked_wrt(const Election& e, const Axis& axis);

/// Independent test: every top-j set of every voter is contiguous on the axis.
bool top_sets_contiguous(const PreferenceOrder& order, const Axis& axis);

/// Lexicographically first axis w.r.t. which the election is single-peaked.
/// Exhaustive over m!/2 axes; throws CapacityError when m > max_m.
std::optional<Axis> find_single_peaked_axis(const Election& e, int max_m = 10);

/// All valid axes in lexicographic order, found via the contiguity test.
std::vector<Axis> single_peaked_axes(const Election& e, int max_m = 10);

struct SingleCrossingReport {
  /// crossings[a][b] for a < b: sign changes of (a above b) along the voter order.
  std::vector<std::vector<int>> crossings;
  bool single_crossing = true;
  int max_crossings = 0;
};

/// `voter_order` must be a permutation of 0..n-1.
SingleCrossingReport single_crossing_report(const Election& e, std::span<const int> voter_order);

struct EuclideanEmbedding {
  int dimension = 1;
  std::vector<std::vector<Rational>> alternatives;  // one k-vector per alternative
  std::vector<std::vector<Rational>> voters;        // one k-vector per voter
};

/// True iff every voter is strictly closer to each alternative it prefers. Ties fail.
/// Throws InputError when positions are missing or have the wrong dimension.
bool verify_euclidean(const Election& e, const EuclideanEmbedding& emb);

/// Partition (A, C \ A) with every voter ranking all of A above all of B or vice versa.
/// A is the lexicographically first valid part. Throws CapacityError when m > max_m.
std::optional<std::pair<std::vector<Alternative>, std::vector<Alternative>>>
group_separable_split(const Election& e, int max_m = 20);

enum class DeletionMode { voters, alternatives };

struct DeletionDistance {
  int distance = 0;
  std::vector<int> witness;  // deleted voters or alternatives, ascending
};

/// Fewest voters (or alternatives) to delete for the election to become single-peaked.
/// Among minimum deletion sets the lexicographically first is returned.
/// Voter mode needs n <= max_n and m <= 10; alternative mode needs m <= max_m.
DeletionDistance sp_deletion_distance(const Election& e, DeletionMode mode, int max_n = 10,
                                      int max_m = 8);

/// The election restricted to `keep` (ascending ids), relabeled to 0..|keep|-1.
Election restrict_alternatives(const Election& e, std::span<const Alternative> keep);

}  // namespace parasoc
