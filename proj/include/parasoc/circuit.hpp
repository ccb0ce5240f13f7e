#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace parasoc {

/// AND2/OR2 have fan-in at most two; the large gates and MAJ take any fan-in >= 1.
enum class GateKind { input, negation, and2, or2, and_big, or_big, majority };

bool is_large(GateKind kind);
std::string_view to_string(GateKind kind);
/// Parses the text-format keyword (INPUT, NOT, AND2, OR2, ANDBIG, ORBIG, MAJ).
std::optional<GateKind> gate_kind_from(std::string_view keyword);

struct Gate {
  GateKind kind = GateKind::input;
  std::vector<int> inputs;  // ids of earlier gates
  int variable = -1;        // for input gates: variable index
};

/// Boolean circuit as a DAG. Gates may only read earlier gates, so the id order is topological.
class Circuit {
 public:
  /// Adds variable x_{num_variables()} and returns its gate id.
  int add_input();
  /// Throws InputError on dangling references or fan-in violations.
  int add_gate(GateKind kind, std::vector<int> inputs);
  void set_output(int gate);

  int num_variables() const noexcept { return static_cast<int>(variable_gates_.size()); }
  int num_gates() const noexcept { return static_cast<int>(gates_.size()); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const Gate& gate(int id) const { return gates_.at(id); }
  int variable_gate(int variable) const { return variable_gates_.at(variable); }
  /// Throws InputError when no output has been set.
  int output() const;
  bool has_output() const noexcept { return output_ >= 0; }

 private:
  std::vector<Gate> gates_;
  std::vector<int> variable_gates_;
  int output_ = -1;
};

/// `assignment[i]` is the value of variable i.
bool evaluate(const Circuit& c, std::span<const std::uint8_t> assignment);
/// Convenience overload: the listed variables are true, all others false.
bool evaluate_set(const Circuit& c, std::span<const int> true_variables);

struct CircuitMetrics {
  int weft = 0;   // most large gates on an input-output path
  int depth = 0;  // most gates on an input-output path
};

CircuitMetrics metrics(const Circuit& c);

/// First weight-k satisfying assignment (lexicographic by variable set), as ascending indices.
/// Throws CapacityError when C(N, k) exceeds `max_candidates`.
std::optional<std::vector<int>> wcs_solve(const Circuit& c, int k,
                                          std::int64_t max_candidates = 20'000'000);

}  // namespace parasoc
