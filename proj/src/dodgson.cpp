#include "parasoc/dodgson.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <unordered_set>

#include "parasoc/errors.hpp"

namespace parasoc {

namespace {

void check_target(const Election& e, Alternative target) {
  if (target < 0 || target >= e.num_alternatives()) {
    throw InputError("target alternative " + std::to_string(target) + " out of range");
  }
}

}  // namespace

DodgsonProgram build_program(const Election& e, Alternative target) {
  check_target(e, target);
  const int m = e.num_alternatives();
  const int n = e.num_voters();
  DodgsonProgram prog;
  prog.target = target;
  prog.num_voters = n;

  std::map<std::vector<Alternative>, int> index_of;
  for (const auto& v : e.voters()) {
    auto [it, inserted] = index_of.emplace(v.ranking(), static_cast<int>(prog.types.size()));
    if (inserted) {
      PreferenceType t;
      t.order = v;
      t.index = it->second;
      t.max_lift = v.rank_of(target) - 1;
      prog.types.push_back(std::move(t));
    }
    ++prog.types[it->second].multiplicity;
  }

  for (const auto& t : prog.types) {
    std::vector<std::vector<std::uint8_t>> per_lift(t.max_lift + 1, std::vector<std::uint8_t>(m, 0));
    const int pos = t.max_lift;  // 0-based position of the target
    for (int j = 1; j <= t.max_lift; ++j) {
      per_lift[j] = per_lift[j - 1];
      per_lift[j][t.order.at(pos - j)] = 1;
    }
    prog.gains.push_back(std::move(per_lift));
  }

  const MajorityMatrix w(e);
  const int needed = n / 2 + 1;
  prog.deficits.assign(m, 0);
  for (Alternative y = 0; y < m; ++y) {
    if (y != target) prog.deficits[y] = std::max(0, needed - w.wins(target, y));
  }
  return prog;
}

bool satisfies(const DodgsonProgram& prog, const DodgsonSolution& sol) {
  if (!sol.feasible || sol.lifts.size() != prog.types.size()) return false;
  const int m = static_cast<int>(prog.deficits.size());
  std::vector<std::int64_t> support(m, 0);
  std::int64_t objective = 0;
  for (std::size_t i = 0; i < prog.types.size(); ++i) {
    const auto& x = sol.lifts[i];
    if (static_cast<int>(x.size()) != prog.types[i].max_lift + 1) return false;
    std::int64_t count = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j] < 0) return false;
      count += x[j];
      objective += static_cast<std::int64_t>(j) * x[j];
      for (int y = 0; y < m; ++y) support[y] += prog.gains[i][j][y] * x[j];
    }
    if (count != prog.types[i].multiplicity) return false;
  }
  for (int y = 0; y < m; ++y) {
    if (support[y] < prog.deficits[y]) return false;
  }
  return objective == sol.score;
}

namespace {

// Within one type, k[t] = number of its voters lifted at least t positions; k is nonincreasing
// and the t-th alternative above the target gains exactly k[t] supports.
class BranchAndBound {
 public:
  explicit BranchAndBound(const DodgsonProgram& prog) : prog_(prog) {
    const int m = static_cast<int>(prog.deficits.size());
    const auto num_types = prog.types.size();
    above_.resize(num_types);
    for (std::size_t i = 0; i < num_types; ++i) {
      const auto& t = prog.types[i];
      for (int j = 1; j <= t.max_lift; ++j) above_[i].push_back(t.order.at(t.max_lift - j));
    }
    capacity_.assign(num_types + 1, std::vector<int>(m, 0));
    for (std::size_t i = num_types; i-- > 0;) {
      capacity_[i] = capacity_[i + 1];
      for (Alternative y : above_[i]) capacity_[i][y] += prog.types[i].multiplicity;
    }
    remaining_ = prog.deficits;
    current_.resize(num_types);
  }

  DodgsonSolution run() {
    search_type(0, 0);
    DodgsonSolution sol;
    if (!found_) return sol;
    sol.feasible = true;
    sol.score = best_;
    for (std::size_t i = 0; i < prog_.types.size(); ++i) {
      const auto& k = best_k_[i];
      const int len = prog_.types[i].max_lift;
      std::vector<int> x(len + 1, 0);
      const int lifted = k.empty() ? 0 : k[0];
      x[0] = prog_.types[i].multiplicity - lifted;
      for (int j = 1; j <= len; ++j) {
        const int at_least_j = j - 1 < static_cast<int>(k.size()) ? k[j - 1] : 0;
        const int at_least_next = j < static_cast<int>(k.size()) ? k[j] : 0;
        x[j] = at_least_j - at_least_next;
      }
      sol.lifts.push_back(std::move(x));
    }
    return sol;
  }

 private:
  std::int64_t lower_bound() const {
    std::int64_t lb = 0;
    for (int r : remaining_) lb += std::max(0, r);
    return lb;
  }

  void search_type(std::size_t i, std::int64_t cost) {
    if (found_ && cost + lower_bound() >= best_) return;
    if (i == prog_.types.size()) {
      if (lower_bound() == 0) {
        found_ = true;
        best_ = cost;
        best_k_ = current_;
      }
      return;
    }
    for (std::size_t y = 0; y < remaining_.size(); ++y) {
      if (remaining_[y] > capacity_[i][y]) return;
    }
    current_[i].clear();
    search_level(i, 0, prog_.types[i].multiplicity, cost);
  }

  // Chooses k[t] for type i at depth t (0-based), at most `ceiling`.
  void search_level(std::size_t i, std::size_t t, int ceiling, std::int64_t cost) {
    const auto& above = above_[i];
    // Lifting deeper than any still-needed opponent only adds cost.
    int useful = 0;
    for (std::size_t u = t; u < above.size(); ++u) useful = std::max(useful, remaining_[above[u]]);
    const int hi = std::min(ceiling, useful);
    if (t == above.size() || hi == 0) {
      search_type(i + 1, cost);
      return;
    }
    const Alternative y = above[t];
    for (int k = hi; k >= 0; --k) {
      if (k > 0 && found_ &&
          cost + k + lower_bound() - std::min(k, std::max(0, remaining_[y])) >= best_) {
        continue;
      }
      if (k == 0) {
        search_type(i + 1, cost);
        break;
      }
      remaining_[y] -= k;
      current_[i].push_back(k);
      search_level(i, t + 1, k, cost + k);
      current_[i].pop_back();
      remaining_[y] += k;
    }
  }

  const DodgsonProgram& prog_;
  std::vector<std::vector<Alternative>> above_;  // nearest first
  std::vector<std::vector<int>> capacity_;       // suffix sums of reachable supports
  std::vector<int> remaining_;
  std::vector<std::vector<int>> current_;
  std::vector<std::vector<int>> best_k_;
  std::int64_t best_ = std::numeric_limits<std::int64_t>::max();
  bool found_ = false;
};

}  // namespace

DodgsonSolution solve_program(const DodgsonProgram& prog) { return BranchAndBound(prog).run(); }

DodgsonSolution dodgson_score(const Election& e, Alternative target) {
  return solve_program(build_program(e, target));
}

bool dodgson_decision(const Election& e, Alternative target, std::int64_t k) {
  const auto sol = dodgson_score(e, target);
  return sol.feasible && sol.score <= k;
}

std::optional<int> dodgson_bruteforce(const Election& e, Alternative target, int k_cap,
                                      DodgsonBruteForceLimits limits) {
  check_target(e, target);
  const int m = e.num_alternatives();
  const int n = e.num_voters();
  if (n * m > limits.max_cells || k_cap > limits.max_k || m > 16) {
    throw CapacityError("dodgson brute force limited to n*m <= " +
                        std::to_string(limits.max_cells) + " and k <= " +
                        std::to_string(limits.max_k));
  }
  if (k_cap < 0) return std::nullopt;

  // 4 bits per alternative, voters concatenated.
  auto encode = [&](const std::vector<std::vector<int>>& profile) {
    std::uint64_t key = 0;
    for (const auto& r : profile) {
      for (int a : r) key = key << 4 | static_cast<std::uint64_t>(a);
    }
    return key;
  };
  auto decode = [&](std::uint64_t key) {
    std::vector<std::vector<int>> profile(n, std::vector<int>(m));
    for (int v = n; v-- > 0;) {
      for (int i = m; i-- > 0;) {
        profile[v][i] = static_cast<int>(key & 0xf);
        key >>= 4;
      }
    }
    return profile;
  };
  auto target_wins = [&](const std::vector<std::vector<int>>& profile) {
    std::vector<int> support(m, 0);
    for (const auto& r : profile) {
      bool below = false;
      for (int a : r) {
        if (a == target) below = true;
        else if (below) ++support[a];
      }
    }
    for (int y = 0; y < m; ++y) {
      if (y != target && 2 * support[y] <= n) return false;
    }
    return true;
  };

  std::vector<std::vector<int>> start;
  for (const auto& v : e.voters()) start.push_back(v.ranking());
  if (target_wins(start)) return 0;

  std::unordered_set<std::uint64_t> seen{encode(start)};
  std::vector<std::uint64_t> frontier{encode(start)};
  for (int depth = 1; depth <= k_cap; ++depth) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : frontier) {
      auto profile = decode(key);
      for (int v = 0; v < n; ++v) {
        for (int i = 0; i + 1 < m; ++i) {
          std::swap(profile[v][i], profile[v][i + 1]);
          const std::uint64_t k2 = encode(profile);
          if (seen.insert(k2).second) {
            if (target_wins(profile)) return depth;
            next.push_back(k2);
          }
          std::swap(profile[v][i], profile[v][i + 1]);
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace parasoc
