#include "parasoc/control.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "parasoc/errors.hpp"

namespace parasoc {

ApprovalView approval_view(const Election& e, int d) {
  const int m = e.num_alternatives();
  if (d < 1 || d >= m) {
    throw InputError("approval depth d=" + std::to_string(d) + " must satisfy 1 <= d < m=" +
                     std::to_string(m));
  }
  if (m > 64) throw CapacityError("approval view supports at most 64 alternatives");
  ApprovalView view;
  view.d = d;
  view.score.assign(m, 0);
  for (const auto& v : e.voters()) {
    std::uint64_t mask = 0;
    for (int i = 0; i < d; ++i) {
      mask |= std::uint64_t{1} << v.at(i);
      ++view.score[v.at(i)];
    }
    view.approves.push_back(mask);
  }
  return view;
}

void validate(const ControlInstance& inst) {
  const auto& e = inst.election;
  if (inst.p < 0 || inst.p >= e.num_alternatives()) throw InputError("p out of range");
  if (inst.k < 0 || inst.k > e.num_voters()) throw InputError("k must satisfy 0 <= k <= n");
  approval_view(e, inst.d);
}

RelevanceSplit relevance_split(const Election& e, int d, Alternative p, WinnerMode mode) {
  const auto view = approval_view(e, d);
  const int m = e.num_alternatives();
  if (p < 0 || p >= m) throw InputError("p out of range");
  RelevanceSplit split;
  std::uint64_t relevant_mask = 0;
  for (Alternative c = 0; c < m; ++c) {
    if (c == p) continue;
    const bool irrelevant = mode == WinnerMode::unique_winner ? view.score[c] < view.score[p]
                                                              : view.score[c] <= view.score[p];
    if (irrelevant) {
      split.irrelevant.push_back(c);
    } else {
      split.relevant.push_back(c);
      relevant_mask |= std::uint64_t{1} << c;
    }
  }
  std::map<std::pair<std::uint64_t, bool>, std::size_t> class_of;
  for (int v = 0; v < e.num_voters(); ++v) {
    const bool approves_p = view.approves[v] >> p & 1u;
    const std::uint64_t rel = view.approves[v] & relevant_mask;
    if (approves_p) split.voters_p.push_back(v);
    else if (rel != 0) split.voters_r.push_back(v);
    else continue;
    auto [it, inserted] = class_of.emplace(std::make_pair(rel, approves_p), split.classes.size());
    if (inserted) split.classes.push_back({rel, approves_p, {}});
    split.classes[it->second].voters.push_back(v);
  }
  return split;
}

Election reduce_instance(const Election& e, int d, Alternative p, WinnerMode mode) {
  Election current = e;
  for (;;) {
    const auto split = relevance_split(current, d, p, mode);
    std::vector<char> keep(current.num_voters(), 0);
    for (int v : split.voters_p) keep[v] = 1;
    for (int v : split.voters_r) keep[v] = 1;
    std::vector<int> removed;
    for (int v = 0; v < current.num_voters(); ++v) {
      if (!keep[v]) removed.push_back(v);
    }
    if (removed.empty() || static_cast<int>(removed.size()) == current.num_voters()) return current;
    current = current.without_voters(removed);
  }
}

bool wins_after_deletion(const ControlInstance& inst, const std::vector<int>& deleted) {
  const auto& e = inst.election;
  std::vector<char> gone(e.num_voters(), 0);
  for (int v : deleted) gone.at(v) = 1;
  const int remaining = e.num_voters() - static_cast<int>(std::count(gone.begin(), gone.end(), 1));
  if (remaining == 0) return false;
  std::vector<Score> s(e.num_alternatives(), 0);
  for (int v = 0; v < e.num_voters(); ++v) {
    if (gone[v]) continue;
    for (int i = 0; i < inst.d; ++i) ++s[e.voter(v).at(i)];
  }
  return is_winner(s, inst.p, inst.mode);
}

namespace {

class ClassEnumerator {
 public:
  ClassEnumerator(const ControlInstance& inst, const RelevanceSplit& split)
      : inst_(inst), view_(approval_view(inst.election, inst.d)) {
    for (const auto& cls : split.classes) {
      if (!cls.approves_p) classes_.push_back(&cls);
    }
    for (Alternative c : split.relevant) {
      // Reductions of s(c) still needed before p wins.
      const Score gap = view_.score[c] - view_.score[inst.p] +
                        (inst.mode == WinnerMode::unique_winner ? 1 : 0);
      relevant_.push_back(c);
      need_.push_back(std::max<Score>(0, gap));
    }
    counts_.assign(classes_.size(), 0);
    // Supply of each relevant alternative still obtainable from classes i.. onwards.
    supply_.assign(classes_.size() + 1, std::vector<Score>(relevant_.size(), 0));
    for (std::size_t i = classes_.size(); i-- > 0;) {
      supply_[i] = supply_[i + 1];
      for (std::size_t r = 0; r < relevant_.size(); ++r) {
        if (classes_[i]->relevant_mask >> relevant_[r] & 1u) {
          supply_[i][r] += static_cast<Score>(classes_[i]->voters.size());
        }
      }
    }
  }

  std::optional<std::vector<int>> run() {
    if (!search(0, inst_.k)) return std::nullopt;
    std::vector<int> deleted;
    for (std::size_t i = 0; i < classes_.size(); ++i) {
      const auto& vs = classes_[i]->voters;
      deleted.insert(deleted.end(), vs.begin(), vs.begin() + counts_[i]);
    }
    std::sort(deleted.begin(), deleted.end());
    return deleted;
  }

 private:
  bool search(std::size_t i, int budget) {
    for (std::size_t r = 0; r < relevant_.size(); ++r) {
      if (need_[r] > supply_[i][r]) return false;
    }
    if (i == classes_.size()) {
      for (Score n : need_) {
        if (n > 0) return false;
      }
      int total = 0;
      for (int c : counts_) total += c;
      return total < inst_.election.num_voters();
    }
    const int size = static_cast<int>(classes_[i]->voters.size());
    const std::uint64_t mask = classes_[i]->relevant_mask;
    for (int take = 0; take <= std::min(size, budget); ++take) {
      counts_[i] = take;
      for (std::size_t r = 0; r < relevant_.size(); ++r) {
        if (mask >> relevant_[r] & 1u) need_[r] -= take;
      }
      const bool ok = search(i + 1, budget - take);
      for (std::size_t r = 0; r < relevant_.size(); ++r) {
        if (mask >> relevant_[r] & 1u) need_[r] += take;
      }
      if (ok) return true;
    }
    counts_[i] = 0;
    return false;
  }

  const ControlInstance& inst_;
  ApprovalView view_;
  std::vector<const VoterClass*> classes_;
  std::vector<Alternative> relevant_;
  std::vector<Score> need_;
  std::vector<std::vector<Score>> supply_;
  std::vector<int> counts_;
};

}  // namespace

std::optional<std::vector<int>> ccdv_fpt(const ControlInstance& inst) {
  validate(inst);
  const auto split = relevance_split(inst.election, inst.d, inst.p, inst.mode);
  if (static_cast<std::int64_t>(split.relevant.size()) >
      static_cast<std::int64_t>(inst.d) * inst.k) {
    return std::nullopt;
  }
  return ClassEnumerator(inst, split).run();
}

std::optional<std::vector<int>> ccdv_bruteforce(const ControlInstance& inst,
                                                std::int64_t max_subsets) {
  validate(inst);
  const int n = inst.election.num_voters();
  std::int64_t total = 0;
  std::int64_t binom = 1;
  for (int s = 0; s <= inst.k; ++s) {
    if (s > 0) binom = binom * (n - s + 1) / s;
    total += binom;
    if (total > max_subsets) {
      throw CapacityError("ccdv brute force would examine more than " +
                          std::to_string(max_subsets) + " deletion sets");
    }
  }
  for (int size = 0; size <= inst.k; ++size) {
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      if (wins_after_deletion(inst, pick)) return pick;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace parasoc
