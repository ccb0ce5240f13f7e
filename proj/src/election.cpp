#include "parasoc/election.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "parasoc/errors.hpp"

namespace parasoc {

PreferenceOrder::PreferenceOrder(std::vector<Alternative> ranking) : ranking_(std::move(ranking)) {
  const int m = size();
  rank_.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const Alternative a = ranking_[i];
    if (a < 0 || a >= m) {
      throw InputError("alternative id " + std::to_string(a) + " out of range 0.." +
                       std::to_string(m - 1));
    }
    if (rank_[a] != 0) throw InputError("alternative " + std::to_string(a) + " listed twice");
    rank_[a] = i + 1;
  }
}

PreferenceOrder PreferenceOrder::identity(int m) {
  std::vector<Alternative> r(m);
  std::iota(r.begin(), r.end(), 0);
  return PreferenceOrder(std::move(r));
}

PreferenceOrder PreferenceOrder::reversed() const {
  return PreferenceOrder(std::vector<Alternative>(ranking_.rbegin(), ranking_.rend()));
}

PreferenceOrder PreferenceOrder::swapped_at(int position) const {
  if (position < 0 || position + 1 >= size()) throw InputError("swap position out of range");
  PreferenceOrder out = *this;
  std::swap(out.ranking_[position], out.ranking_[position + 1]);
  out.rank_[out.ranking_[position]] = position + 1;
  out.rank_[out.ranking_[position + 1]] = position + 2;
  return out;
}

Election::Election(int m, std::vector<PreferenceOrder> voters, std::vector<std::string> labels)
    : m_(m), voters_(std::move(voters)), labels_(std::move(labels)) {
  if (m < 1) throw InputError("an election needs at least one alternative");
  if (voters_.empty()) throw InputError("an election needs at least one voter");
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    if (voters_[v].size() != m) {
      throw DimensionError("voter " + std::to_string(v) + " ranks " +
                           std::to_string(voters_[v].size()) + " alternatives, expected " +
                           std::to_string(m));
    }
  }
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != m) throw DimensionError("label count differs from m");
    auto sorted = labels_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw InputError("alternative labels must be distinct");
    }
  }
}

std::string Election::label(Alternative a) const {
  if (a < 0 || a >= m_) throw InputError("alternative out of range");
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

Election Election::with_voters(std::vector<PreferenceOrder> voters) const {
  return Election(m_, std::move(voters), labels_);
}

Election Election::without_voters(std::span<const int> removed) const {
  std::vector<char> drop(voters_.size(), 0);
  for (int v : removed) drop.at(v) = 1;
  std::vector<PreferenceOrder> kept;
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    if (!drop[v]) kept.push_back(voters_[v]);
  }
  return with_voters(std::move(kept));
}

MajorityMatrix::MajorityMatrix(const Election& e)
    : m_(e.num_alternatives()), n_(e.num_voters()), wins_(static_cast<std::size_t>(m_) * m_, 0) {
  for (const auto& order : e.voters()) {
    const auto& r = order.ranking();
    for (int i = 0; i < m_; ++i) {
      for (int j = i + 1; j < m_; ++j) ++wins_[static_cast<std::size_t>(r[i]) * m_ + r[j]];
    }
  }
}

MajorityMatrix majority_matrix(const Election& e) { return MajorityMatrix(e); }

std::optional<Alternative> condorcet_winner(const MajorityMatrix& w) {
  std::optional<Alternative> found;
  for (Alternative c = 0; c < w.size(); ++c) {
    bool beats_all = true;
    for (Alternative d = 0; d < w.size() && beats_all; ++d) {
      if (d != c && !w.beats(c, d)) beats_all = false;
    }
    if (beats_all) {
      if (found) throw std::logic_error("two Condorcet winners");
      found = c;
    }
  }
  return found;
}

std::optional<Alternative> condorcet_winner(const Election& e) {
  return condorcet_winner(MajorityMatrix(e));
}

ScoringVector::ScoringVector(std::vector<Score> alpha) : alpha_(std::move(alpha)) {
  if (alpha_.empty()) throw InputError("scoring vector is empty");
  for (std::size_t i = 0; i < alpha_.size(); ++i) {
    if (alpha_[i] < 0) throw InputError("scoring vector entries must be nonnegative");
    if (i > 0 && alpha_[i] > alpha_[i - 1]) throw InputError("scoring vector must be nonincreasing");
  }
}

ScoringVector ScoringVector::plurality(int m) { return approval(m, 1); }

ScoringVector ScoringVector::approval(int m, int d) {
  if (m < 1 || d < 0 || d > m) throw InputError("approval depth out of range");
  std::vector<Score> a(m, 0);
  std::fill(a.begin(), a.begin() + d, 1);
  return ScoringVector(std::move(a));
}

ScoringVector ScoringVector::borda(int m) {
  std::vector<Score> a(m);
  for (int i = 0; i < m; ++i) a[i] = m - 1 - i;
  return ScoringVector(std::move(a));
}

Score checked_add(Score a, Score b) {
  Score r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("score overflow");
  return r;
}

std::vector<Score> scores(const Election& e, const ScoringVector& s) {
  const int m = e.num_alternatives();
  if (s.size() != m) {
    throw DimensionError("scoring vector has length " + std::to_string(s.size()) + ", expected " +
                         std::to_string(m));
  }
  std::vector<Score> total(m, 0);
  for (const auto& order : e.voters()) {
    for (int i = 0; i < m; ++i) total[order.at(i)] = checked_add(total[order.at(i)], s.values()[i]);
  }
  return total;
}

bool is_winner(std::span<const Score> sc, Alternative p, WinnerMode mode) {
  for (std::size_t c = 0; c < sc.size(); ++c) {
    if (static_cast<Alternative>(c) == p) continue;
    if (sc[c] > sc[p]) return false;
    if (mode == WinnerMode::unique_winner && sc[c] == sc[p]) return false;
  }
  return true;
}

ScoringResult scoring_winners(const Election& e, const ScoringVector& s, WinnerMode mode) {
  ScoringResult out;
  out.scores = scores(e, s);
  for (Alternative c = 0; c < e.num_alternatives(); ++c) {
    if (is_winner(out.scores, c, mode)) out.winners.push_back(c);
  }
  return out;
}

std::int64_t kendall_tau(const PreferenceOrder& p, const PreferenceOrder& q) {
  if (p.size() != q.size()) throw DimensionError("orders are over different alternative sets");
  // Inversions of q's ranks read in p's order.
  const auto& r = p.ranking();
  std::int64_t inversions = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) {
      if (q.rank_of(r[i]) > q.rank_of(r[j])) ++inversions;
    }
  }
  return inversions;
}

}  // namespace parasoc
