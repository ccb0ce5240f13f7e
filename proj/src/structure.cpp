#include "parasoc/structure.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "parasoc/errors.hpp"

namespace parasoc {

namespace {

void check_axis(const Election& e, const Axis& axis) {
  if (axis.order.size() != e.num_alternatives()) throw DimensionError("axis size differs from m");
}

// Visits axes with front < back in lexicographic order until `visit` returns true.
template <typename Visit>
void for_each_half_axis(int m, Visit&& visit) {
  std::vector<Alternative> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (m > 1 && perm.front() > perm.back()) continue;
    if (visit(perm)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
}

}  // namespace

int peak_count(const PreferenceOrder& order, const Axis& axis) {
  const int m = order.size();
  if (axis.order.size() != m) throw DimensionError("axis size differs from the order");
  std::vector<int> utility(m);
  for (int i = 0; i < m; ++i) utility[i] = m - order.rank_of(axis.order.at(i));
  int peaks = 0;
  for (int i = 0; i < m; ++i) {
    const bool rises_in = i == 0 || utility[i] > utility[i - 1];
    const bool falls_out = i == m - 1 || utility[i] > utility[i + 1];
    if (rises_in && falls_out) ++peaks;
  }
  return peaks;
}

bool is_single_peaked_wrt(const Election& e, const Axis& axis) {
  check_axis(e, axis);
  return std::all_of(e.voters().begin(), e.voters().end(),
                     [&](const PreferenceOrder& v) { return peak_count(v, axis) == 1; });
}

bool top_sets_contiguous(const PreferenceOrder& order, const Axis& axis) {
  int lo = order.size();
  int hi = -1;
  for (int j = 0; j < order.size(); ++j) {
    const int pos = axis.position(order.at(j));
    lo = std::min(lo, pos);
    hi = std::max(hi, pos);
    if (hi - lo != j) return false;
  }
  return true;
}

std::optional<Axis> find_single_peaked_axis(const Election& e, int max_m) {
  const int m = e.num_alternatives();
  if (m > max_m) {
    throw CapacityError("axis search is exhaustive; m <= " + std::to_string(max_m));
  }
  std::optional<Axis> found;
  for_each_half_axis(m, [&](const std::vector<Alternative>& perm) {
    Axis axis{PreferenceOrder(perm)};
    if (is_single_peaked_wrt(e, axis)) {
      found = std::move(axis);
      return true;
    }
    return false;
  });
  return found;
}

std::vector<Axis> single_peaked_axes(const Election& e, int max_m) {
  const int m = e.num_alternatives();
  if (m > max_m) {
    throw CapacityError("axis enumeration is exhaustive; m <= " + std::to_string(max_m));
  }
  std::vector<Axis> out;
  std::vector<Alternative> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Axis axis{PreferenceOrder(perm)};
    const bool ok = std::all_of(e.voters().begin(), e.voters().end(), [&](const auto& v) {
      return top_sets_contiguous(v, axis);
    });
    if (ok) out.push_back(std::move(axis));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

SingleCrossingReport single_crossing_report(const Election& e, std::span<const int> voter_order) {
  const int n = e.num_voters();
  const int m = e.num_alternatives();
  if (static_cast<int>(voter_order.size()) != n) throw DimensionError("voter order size differs from n");
  std::vector<char> seen(n, 0);
  for (int v : voter_order) {
    if (v < 0 || v >= n || seen[v]) throw InputError("voter order is not a permutation");
    seen[v] = 1;
  }
  SingleCrossingReport rep;
  rep.crossings.assign(m, std::vector<int>(m, 0));
  for (Alternative a = 0; a < m; ++a) {
    for (Alternative b = a + 1; b < m; ++b) {
      int changes = 0;
      for (int i = 1; i < n; ++i) {
        if (e.voter(voter_order[i]).prefers(a, b) != e.voter(voter_order[i - 1]).prefers(a, b)) {
          ++changes;
        }
      }
      rep.crossings[a][b] = changes;
      rep.max_crossings = std::max(rep.max_crossings, changes);
    }
  }
  rep.single_crossing = rep.max_crossings <= 1;
  return rep;
}

bool verify_euclidean(const Election& e, const EuclideanEmbedding& emb) {
  if (emb.dimension < 1) throw InputError("embedding dimension must be at least 1");
  if (static_cast<int>(emb.alternatives.size()) != e.num_alternatives() ||
      static_cast<int>(emb.voters.size()) != e.num_voters()) {
    throw InputError("embedding must place every alternative and every voter");
  }
  auto check_dim = [&](const std::vector<Rational>& x) {
    if (static_cast<int>(x.size()) != emb.dimension) throw InputError("position has wrong dimension");
  };
  for (const auto& x : emb.alternatives) check_dim(x);
  for (const auto& x : emb.voters) check_dim(x);

  auto dist2 = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational s = 0;
    for (int i = 0; i < emb.dimension; ++i) s += (x[i] - y[i]) * (x[i] - y[i]);
    return s;
  };
  for (int v = 0; v < e.num_voters(); ++v) {
    const auto& order = e.voter(v);
    Rational prev = dist2(emb.voters[v], emb.alternatives[order.at(0)]);
    for (int i = 1; i < order.size(); ++i) {
      Rational cur = dist2(emb.voters[v], emb.alternatives[order.at(i)]);
      if (!(prev < cur)) return false;
      prev = std::move(cur);
    }
  }
  return true;
}

std::optional<std::pair<std::vector<Alternative>, std::vector<Alternative>>>
group_separable_split(const Election& e, int max_m) {
  const int m = e.num_alternatives();
  if (m > max_m) throw CapacityError("group separability check limited to m <= " + std::to_string(max_m));
  if (m < 2) return std::nullopt;
  // Any valid part is a top set or a bottom set of every voter, in particular of voter 0.
  const auto& first = e.voter(0);
  std::optional<std::vector<Alternative>> best;
  for (int j = 1; j < m; ++j) {
    std::vector<char> in_a(m, 0);
    for (int i = 0; i < j; ++i) in_a[first.at(i)] = 1;
    bool ok = true;
    for (const auto& v : e.voters()) {
      bool top = true;
      bool bottom = true;
      for (int i = 0; i < j; ++i) top = top && in_a[v.at(i)];
      for (int i = m - j; i < m; ++i) bottom = bottom && in_a[v.at(i)];
      if (!top && !bottom) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Alternative> a, b;
    for (Alternative c = 0; c < m; ++c) (in_a[c] ? a : b).push_back(c);
    for (auto* part : {&a, &b}) {
      if (!best || *part < *best) best = *part;
    }
  }
  if (!best) return std::nullopt;
  std::vector<Alternative> rest;
  for (Alternative c = 0; c < m; ++c) {
    if (!std::binary_search(best->begin(), best->end(), c)) rest.push_back(c);
  }
  return std::make_pair(*best, rest);
}

Election restrict_alternatives(const Election& e, std::span<const Alternative> keep) {
  const int m = e.num_alternatives();
  std::vector<int> new_id(m, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= m || new_id[keep[i]] >= 0) throw InputError("bad alternative subset");
    new_id[keep[i]] = static_cast<int>(i);
  }
  std::vector<PreferenceOrder> voters;
  for (const auto& v : e.voters()) {
    std::vector<Alternative> r;
    for (Alternative a : v.ranking()) {
      if (new_id[a] >= 0) r.push_back(new_id[a]);
    }
    voters.emplace_back(std::move(r));
  }
  std::vector<std::string> labels;
  if (!e.labels().empty()) {
    for (Alternative a : keep) labels.push_back(e.labels()[a]);
  }
  return Election(static_cast<int>(keep.size()), std::move(voters), std::move(labels));
}

namespace {

bool ascending_less(std::uint64_t a, std::uint64_t b) {
  while (a && b) {
    const int fa = std::countr_zero(a), fb = std::countr_zero(b);
    if (fa != fb) return fa < fb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

}  // namespace

DeletionDistance sp_deletion_distance(const Election& e, DeletionMode mode, int max_n, int max_m) {
  const int n = e.num_voters();
  const int m = e.num_alternatives();
  DeletionDistance out;
  if (mode == DeletionMode::voters) {
    if (n > max_n || m > 10) {
      throw CapacityError("voter deletion distance limited to n <= " + std::to_string(max_n) +
                          " and m <= 10");
    }
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    std::uint64_t best_delete = all;
    for_each_half_axis(m, [&](const std::vector<Alternative>& perm) {
      const Axis axis{PreferenceOrder(perm)};
      std::uint64_t kept = 0;
      for (int v = 0; v < n; ++v) {
        if (peak_count(e.voter(v), axis) == 1) kept |= std::uint64_t{1} << v;
      }
      const std::uint64_t del = all & ~kept;
      const int cnt = std::popcount(del);
      const int best_cnt = std::popcount(best_delete);
      if (cnt < best_cnt || (cnt == best_cnt && ascending_less(del, best_delete))) best_delete = del;
      return false;
    });
    out.distance = std::popcount(best_delete);
    out.witness = members(best_delete);
    return out;
  }

  if (m > max_m) {
    throw CapacityError("alternative deletion distance limited to m <= " + std::to_string(max_m));
  }
  for (int size = 0; size <= m; ++size) {
    std::vector<int> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
      std::vector<Alternative> keep;
      for (Alternative c = 0, j = 0; c < m; ++c) {
        if (j < size && pick[j] == c) ++j;
        else keep.push_back(c);
      }
      if (!keep.empty() && find_single_peaked_axis(restrict_alternatives(e, keep), max_m)) {
        out.distance = size;
        out.witness = pick;
        return out;
      }
      int i = size - 1;
      while (i >= 0 && pick[i] == m - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace parasoc
