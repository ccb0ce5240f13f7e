#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace parasoc {

using Alternative = int;
using Score = std::int64_t;

/// A complete strict ranking of the alternatives 0..m-1, most preferred first.
class PreferenceOrder {
 public:
  PreferenceOrder() = default;
  /// Throws InputError unless `ranking` is a permutation of 0..m-1.
  explicit PreferenceOrder(std::vector<Alternative> ranking);

  static PreferenceOrder identity(int m);

  int size() const noexcept { return static_cast<int>(ranking_.size()); }
  const std::vector<Alternative>& ranking() const noexcept { return ranking_; }
  Alternative at(int position) const { return ranking_.at(position); }
  Alternative top() const { return ranking_.front(); }
  /// 1-based position of `a`.
  int rank_of(Alternative a) const { return rank_.at(a); }
  bool prefers(Alternative a, Alternative b) const { return rank_.at(a) < rank_.at(b); }

  PreferenceOrder reversed() const;
  /// Swaps the alternatives at 0-based positions `position` and `position + 1`.
  PreferenceOrder swapped_at(int position) const;

  friend bool operator==(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const PreferenceOrder& a, const PreferenceOrder& b) {
    return a.ranking_ <=> b.ranking_;
  }

 private:
  std::vector<Alternative> ranking_;
  std::vector<int> rank_;  // indexed by alternative, 1-based positions
};

/// Alternatives 0..m-1 and an ordered, nonempty list of voters.
class Election {
 public:
  Election() = default;
  Election(int m, std::vector<PreferenceOrder> voters, std::vector<std::string> labels = {});

  int num_alternatives() const noexcept { return m_; }
  int num_voters() const noexcept { return static_cast<int>(voters_.size()); }
  const std::vector<PreferenceOrder>& voters() const noexcept { return voters_; }
  const PreferenceOrder& voter(int v) const { return voters_.at(v); }
  /// Empty when the election carries no labels.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Alternative a) const;

  /// Same alternatives, different voter list.
  Election with_voters(std::vector<PreferenceOrder> voters) const;
  /// Drops the voters listed in `removed` (indices into the current list).
  Election without_voters(std::span<const int> removed) const;

  friend bool operator==(const Election& a, const Election& b) {
    return a.m_ == b.m_ && a.voters_ == b.voters_ && a.labels_ == b.labels_;
  }

 private:
  int m_ = 0;
  std::vector<PreferenceOrder> voters_;
  std::vector<std::string> labels_;
};

/// wins(c, d) = number of voters ranking c above d.
class MajorityMatrix {
 public:
  explicit MajorityMatrix(const Election& e);

  int size() const noexcept { return m_; }
  int num_voters() const noexcept { return n_; }
  int wins(Alternative c, Alternative d) const { return wins_[static_cast<std::size_t>(c) * m_ + d]; }
  /// Strict pairwise majority: 2 * wins(c, d) > n.
  bool beats(Alternative c, Alternative d) const { return 2 * wins(c, d) > n_; }

 private:
  int m_;
  int n_;
  std::vector<int> wins_;
};

MajorityMatrix majority_matrix(const Election& e);

std::optional<Alternative> condorcet_winner(const Election& e);
std::optional<Alternative> condorcet_winner(const MajorityMatrix& w);

/// Positional scoring vector (alpha_1 >= ... >= alpha_m >= 0).
class ScoringVector {
 public:
  explicit ScoringVector(std::vector<Score> alpha);

  static ScoringVector plurality(int m);
  static ScoringVector approval(int m, int d);
  static ScoringVector borda(int m);

  int size() const noexcept { return static_cast<int>(alpha_.size()); }
  Score at_position(int position_1based) const { return alpha_.at(position_1based - 1); }
  const std::vector<Score>& values() const noexcept { return alpha_; }

 private:
  std::vector<Score> alpha_;
};

/// Co-winner: every alternative with maximal score wins. Unique: only a sole maximum wins.
enum class WinnerMode { co_winner, unique_winner };

struct ScoringResult {
  std::vector<Score> scores;
  std::vector<Alternative> winners;  // ascending ids; may be empty in unique mode
};

/// Throws DimensionError when |alpha| != m.
ScoringResult scoring_winners(const Election& e, const ScoringVector& s,
                              WinnerMode mode = WinnerMode::co_winner);

std::vector<Score> scores(const Election& e, const ScoringVector& s);

/// Whether `p` wins given final scores.
bool is_winner(std::span<const Score> scores, Alternative p, WinnerMode mode);

/// Number of pairs ranked oppositely. Throws DimensionError on size mismatch.
std::int64_t kendall_tau(const PreferenceOrder& p, const PreferenceOrder& q);

/// Adds with an overflow check; throws std::overflow_error.
Score checked_add(Score a, Score b);

}  // namespace parasoc
