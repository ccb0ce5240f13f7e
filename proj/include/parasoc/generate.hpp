#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "parasoc/election.hpp"
#include "parasoc/structure.hpp"

namespace parasoc {

enum class GeneratorModel { impartial_culture, single_peaked, euclidean_1d };

std::string_view to_string(GeneratorModel model);
std::optional<GeneratorModel> generator_model_from(std::string_view name);

struct GeneratorSpec {
  GeneratorModel model = GeneratorModel::impartial_culture;
  int m = 3;
  int n = 3;
  std::uint64_t seed = 0;
  std::optional<Axis> axis;  // single-peaked only; drawn from the seed when absent
};

struct Generated {
  Election election;
  std::optional<Axis> axis;
  std::optional<EuclideanEmbedding> embedding;
};

/// Portable draws on top of std::mt19937_64, whose output sequence is fixed by the standard.
/// Distribution objects from <random> are avoided because their algorithms are unspecified.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound) by rejection sampling. bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);
  bool coin() { return (engine_() >> 63) != 0; }
  std::vector<int> permutation(int m);  // Fisher-Yates
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Throws InputError for m < 1, n < 1 or an axis of the wrong size.
Generated generate(const GeneratorSpec& spec);

}  // namespace parasoc
