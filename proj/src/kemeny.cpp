#include "parasoc/kemeny.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>

#include "parasoc/errors.hpp"

namespace parasoc {

std::int64_t kemeny_score_of(const Election& e, const PreferenceOrder& ranking) {
  std::int64_t total = 0;
  for (const auto& v : e.voters()) total = checked_add(total, kendall_tau(ranking, v));
  return total;
}

KemenyResult kemeny_brute_force(const Election& e, int max_m) {
  const int m = e.num_alternatives();
  if (m > max_m) {
    throw CapacityError("kemeny brute force supports m <= " + std::to_string(max_m) + ", got " +
                        std::to_string(m));
  }
  const MajorityMatrix w(e);
  std::vector<Alternative> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::vector<Alternative> best_perm;
  do {
    std::int64_t s = 0;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) s += w.wins(perm[j], perm[i]);
    }
    if (s < best) {
      best = s;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {PreferenceOrder(std::move(best_perm)), best};
}

KemenyResult kemeny_dp(const Election& e, int max_m) {
  const int m = e.num_alternatives();
  const int limit = std::min(max_m, 24);
  if (m > limit) {
    throw CapacityError("kemeny dp supports m <= " + std::to_string(limit) + ", got " +
                        std::to_string(m));
  }
  const MajorityMatrix w(e);
  const std::int64_t n = e.num_voters();
  const std::int64_t worst = n * m * (m - 1) / 2;
  if (worst >= std::numeric_limits<std::uint32_t>::max()) {
    throw CapacityError("kemeny dp score bound exceeds 32-bit table entries");
  }

  // Placing c next, with U still unplaced, costs sum over c' in U \ {c} of wins[c'][c].
  const std::uint32_t full = (1u << m) - 1;
  // rest[P] = optimal cost of ordering the alternatives outside the placed set P.
  std::vector<std::uint32_t> rest(std::size_t{1} << m, 0);
  for (std::uint32_t placed = full; placed-- > 0;) {
    const std::uint32_t unplaced = full & ~placed;
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (int c = 0; c < m; ++c) {
      if (!(unplaced >> c & 1u)) continue;
      std::uint32_t cost = 0;
      for (int d = 0; d < m; ++d) {
        if (d != c && (unplaced >> d & 1u)) cost += static_cast<std::uint32_t>(w.wins(d, c));
      }
      best = std::min(best, cost + rest[placed | (1u << c)]);
    }
    rest[placed] = best;
  }

  // Smallest id achieving the optimum at each step gives the lexicographically first ranking.
  std::vector<Alternative> ranking;
  ranking.reserve(m);
  std::uint32_t placed = 0;
  while (placed != full) {
    const std::uint32_t unplaced = full & ~placed;
    for (int c = 0; c < m; ++c) {
      if (!(unplaced >> c & 1u)) continue;
      std::uint32_t cost = 0;
      for (int d = 0; d < m; ++d) {
        if (d != c && (unplaced >> d & 1u)) cost += static_cast<std::uint32_t>(w.wins(d, c));
      }
      if (cost + rest[placed | (1u << c)] == rest[placed]) {
        ranking.push_back(c);
        placed |= 1u << c;
        break;
      }
    }
  }
  return {PreferenceOrder(std::move(ranking)), static_cast<std::int64_t>(rest[0])};
}

bool kemeny_decision(const Election& e, std::int64_t k) {
  const std::int64_t m = e.num_alternatives();
  if (k >= e.num_voters() * m * (m - 1) / 2) return true;
  return kemeny_dp(e).score <= k;
}

std::int64_t avg_pairwise_distance(const Election& e) {
  const std::int64_t n = e.num_voters();
  if (n < 2) return 0;
  std::int64_t total = 0;
  for (int v = 0; v < n; ++v) {
    for (int u = v + 1; u < n; ++u) total = checked_add(total, kendall_tau(e.voter(v), e.voter(u)));
  }
  const std::int64_t pairs = n * (n - 1) / 2;
  return (total + pairs - 1) / pairs;
}

}  // namespace parasoc
