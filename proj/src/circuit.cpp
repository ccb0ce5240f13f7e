#include "parasoc/circuit.hpp"

#include <algorithm>
#include <string>

#include "parasoc/errors.hpp"

namespace parasoc {

bool is_large(GateKind kind) {
  return kind == GateKind::and_big || kind == GateKind::or_big || kind == GateKind::majority;
}

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::input: return "INPUT";
    case GateKind::negation: return "NOT";
    case GateKind::and2: return "AND2";
    case GateKind::or2: return "OR2";
    case GateKind::and_big: return "ANDBIG";
    case GateKind::or_big: return "ORBIG";
    case GateKind::majority: return "MAJ";
  }
  return "?";
}

std::optional<GateKind> gate_kind_from(std::string_view keyword) {
  for (GateKind k : {GateKind::input, GateKind::negation, GateKind::and2, GateKind::or2,
                     GateKind::and_big, GateKind::or_big, GateKind::majority}) {
    if (to_string(k) == keyword) return k;
  }
  return std::nullopt;
}

int Circuit::add_input() {
  Gate g;
  g.variable = num_variables();
  gates_.push_back(std::move(g));
  variable_gates_.push_back(num_gates() - 1);
  return num_gates() - 1;
}

int Circuit::add_gate(GateKind kind, std::vector<int> inputs) {
  if (kind == GateKind::input) return add_input();
  const auto fan_in = inputs.size();
  const std::string name(to_string(kind));
  if (fan_in == 0) throw InputError(name + " gate needs at least one input");
  if (kind == GateKind::negation && fan_in != 1) throw InputError("NOT gate takes exactly one input");
  if ((kind == GateKind::and2 || kind == GateKind::or2) && fan_in > 2) {
    throw InputError(name + " gate takes at most two inputs");
  }
  for (int in : inputs) {
    if (in < 0 || in >= num_gates()) {
      throw InputError(name + " gate reads undefined gate " + std::to_string(in));
    }
  }
  gates_.push_back({kind, std::move(inputs), -1});
  return num_gates() - 1;
}

void Circuit::set_output(int gate) {
  if (gate < 0 || gate >= num_gates()) throw InputError("output refers to an undefined gate");
  output_ = gate;
}

int Circuit::output() const {
  if (output_ < 0) throw InputError("circuit has no output gate");
  return output_;
}

bool evaluate(const Circuit& c, std::span<const std::uint8_t> assignment) {
  if (static_cast<int>(assignment.size()) != c.num_variables()) {
    throw InputError("assignment size differs from the number of variables");
  }
  const int out = c.output();
  std::vector<std::uint8_t> value(out + 1, 0);
  for (int id = 0; id <= out; ++id) {
    const Gate& g = c.gate(id);
    std::size_t ones = 0;
    for (int in : g.inputs) ones += value[in];
    const std::size_t fan_in = g.inputs.size();
    switch (g.kind) {
      case GateKind::input: value[id] = assignment[g.variable] != 0; break;
      case GateKind::negation: value[id] = ones == 0; break;
      case GateKind::and2:
      case GateKind::and_big: value[id] = ones == fan_in; break;
      case GateKind::or2:
      case GateKind::or_big: value[id] = ones > 0; break;
      case GateKind::majority: value[id] = 2 * ones > fan_in; break;
    }
  }
  return value[out] != 0;
}

bool evaluate_set(const Circuit& c, std::span<const int> true_variables) {
  std::vector<std::uint8_t> a(c.num_variables(), 0);
  for (int v : true_variables) {
    if (v < 0 || v >= c.num_variables()) throw InputError("variable index out of range");
    a[v] = 1;
  }
  return evaluate(c, a);
}

CircuitMetrics metrics(const Circuit& c) {
  const int out = c.output();
  std::vector<int> weft(out + 1, 0), depth(out + 1, 0);
  for (int id = 0; id <= out; ++id) {
    const Gate& g = c.gate(id);
    if (g.kind == GateKind::input) continue;
    int w = 0, d = 0;
    for (int in : g.inputs) {
      w = std::max(w, weft[in]);
      d = std::max(d, depth[in]);
    }
    weft[id] = w + (is_large(g.kind) ? 1 : 0);
    depth[id] = d + 1;
  }
  return {weft[out], depth[out]};
}

std::optional<std::vector<int>> wcs_solve(const Circuit& c, int k, std::int64_t max_candidates) {
  const int n = c.num_variables();
  if (k < 0 || k > n) return std::nullopt;
  // C(n, k) with early exit.
  std::int64_t count = 1;
  for (int i = 1; i <= std::min(k, n - k); ++i) {
    count = count * (n - std::min(k, n - k) + i) / i;
    if (count > max_candidates) {
      throw CapacityError("weight-" + std::to_string(k) + " search over " + std::to_string(n) +
                          " variables exceeds " + std::to_string(max_candidates) + " candidates");
    }
  }
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  std::vector<std::uint8_t> assignment(n, 0);
  for (;;) {
    std::fill(assignment.begin(), assignment.end(), 0);
    for (int v : pick) assignment[v] = 1;
    if (evaluate(c, assignment)) return pick;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return std::nullopt;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace parasoc
