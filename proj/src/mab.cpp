#include "parasoc/mab.hpp"

#include <algorithm>
#include <string>

#include "parasoc/errors.hpp"

namespace parasoc {

namespace {

void check_subset(const std::vector<int>& s, int m, const char* what) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || s[i] >= m) throw InputError(std::string(what) + " names an unknown proposal");
    if (i > 0 && s[i] <= s[i - 1]) throw InputError(std::string(what) + " must be strictly ascending");
  }
}

}  // namespace

void validate(const MabInstance& inst) {
  if (inst.num_proposals < 1) throw InputError("MAB instance needs at least one proposal");
  if (inst.ballots.empty()) throw InputError("MAB instance needs at least one voter");
  for (const auto& b : inst.ballots) check_subset(b, inst.num_proposals, "ballot");
  check_subset(inst.agenda, inst.num_proposals, "agenda");
}

bool accepts(const std::vector<int>& ballot, const std::vector<int>& q) {
  std::size_t common = 0;
  auto it = ballot.begin();
  for (int x : q) {
    it = std::lower_bound(it, ballot.end(), x);
    if (it != ballot.end() && *it == x) ++common;
  }
  return 2 * common > q.size();
}

bool society_accepts(const MabInstance& inst, const std::vector<int>& q, bool unanimous) {
  std::size_t yes = 0;
  for (const auto& b : inst.ballots) yes += accepts(b, q) ? 1 : 0;
  return unanimous ? yes == inst.ballots.size() : 2 * yes > inst.ballots.size();
}

std::optional<std::vector<int>> mab_solve(const MabInstance& inst, std::optional<int> size,
                                          bool unanimous, int max_m) {
  validate(inst);
  const int m = inst.num_proposals;
  if (m > max_m) throw CapacityError("MAB search limited to m <= " + std::to_string(max_m));
  const int fixed = static_cast<int>(inst.agenda.size());
  if (size && (*size < fixed || *size > m)) {
    throw InputError("ballot size must lie between |agenda| and the number of proposals");
  }
  std::vector<int> free;
  for (int p = 0; p < m; ++p) {
    if (!std::binary_search(inst.agenda.begin(), inst.agenda.end(), p)) free.push_back(p);
  }
  const int nfree = static_cast<int>(free.size());
  const int lo = size ? *size - fixed : 0;
  const int hi = size ? *size - fixed : nfree;
  for (int extra = lo; extra <= hi; ++extra) {
    std::vector<int> pick(extra);
    for (int i = 0; i < extra; ++i) pick[i] = i;
    for (;;) {
      std::vector<int> q = inst.agenda;
      for (int i : pick) q.push_back(free[i]);
      std::sort(q.begin(), q.end());
      if (society_accepts(inst, q, unanimous)) return q;
      int i = extra - 1;
      while (i >= 0 && pick[i] == nfree - extra + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < extra; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Circuit mab_to_majority_circuit(const MabInstance& inst, int k, bool unanimous) {
  validate(inst);
  if (k < 1) throw InputError("target ballot size must be at least 1");
  Circuit c;
  for (int p = 0; p < inst.num_proposals; ++p) c.add_input();

  // Constants from x_0: FALSE = x_0 AND NOT x_0, TRUE = NOT FALSE.
  const int not_x0 = c.add_gate(GateKind::negation, {c.variable_gate(0)});
  const int f = c.add_gate(GateKind::and2, {c.variable_gate(0), not_x0});
  const int t = c.add_gate(GateKind::negation, {f});

  // Voter i accepts a size-k ballot iff s = |B_i ∩ Q| >= need. With T true and Z false pads over
  // a ballot of size b, MAJ fires iff 2(s + T) > b + T + Z, i.e. 2s > b - T + Z; choose
  // Z - T = 2*need - 1 - b so that this reads 2s > 2*need - 1.
  const int need = k / 2 + 1;
  std::vector<int> voter_gates;
  for (const auto& ballot : inst.ballots) {
    std::vector<int> ins;
    for (int p : ballot) ins.push_back(c.variable_gate(p));
    const int pad = 2 * need - 1 - static_cast<int>(ballot.size());
    for (int i = 0; i < std::abs(pad); ++i) ins.push_back(pad > 0 ? f : t);
    voter_gates.push_back(c.add_gate(GateKind::majority, std::move(ins)));
  }
  int out = c.add_gate(unanimous ? GateKind::and_big : GateKind::majority, std::move(voter_gates));
  for (int q : inst.agenda) out = c.add_gate(GateKind::and2, {out, c.variable_gate(q)});
  c.set_output(out);
  return c;
}

}  // namespace parasoc
