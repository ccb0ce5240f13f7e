#include "parasoc/generate.hpp"

#include <algorithm>
#include <limits>

#include "parasoc/errors.hpp"

namespace parasoc {

std::string_view to_string(GeneratorModel model) {
  switch (model) {
    case GeneratorModel::impartial_culture: return "impartial-culture";
    case GeneratorModel::single_peaked: return "single-peaked";
    case GeneratorModel::euclidean_1d: return "euclidean-1d";
  }
  return "?";
}

std::optional<GeneratorModel> generator_model_from(std::string_view name) {
  if (name == "impartial-culture" || name == "ic") return GeneratorModel::impartial_culture;
  if (name == "single-peaked" || name == "sp") return GeneratorModel::single_peaked;
  if (name == "euclidean-1d" || name == "euclid") return GeneratorModel::euclidean_1d;
  return std::nullopt;
}

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InputError("uniform_below: bound must be positive");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % bound + 1) % bound;  // largest accepted draw
  for (;;) {
    const std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

std::vector<int> Rng::permutation(int m) {
  std::vector<int> p(m);
  for (int i = 0; i < m; ++i) p[i] = i;
  for (int i = m - 1; i > 0; --i) {
    std::swap(p[i], p[uniform_below(static_cast<std::uint64_t>(i) + 1)]);
  }
  return p;
}

namespace {

PreferenceOrder single_peaked_vote(Rng& rng, const Axis& axis) {
  const auto& pos = axis.order.ranking();
  const int m = static_cast<int>(pos.size());
  int peak = static_cast<int>(rng.uniform_below(m));
  std::vector<Alternative> vote{pos[peak]};
  int left = peak - 1, right = peak + 1;
  while (left >= 0 || right < m) {
    bool go_left;
    if (left < 0) go_left = false;
    else if (right >= m) go_left = true;
    else go_left = rng.coin();
    vote.push_back(go_left ? pos[left--] : pos[right++]);
  }
  return PreferenceOrder(std::move(vote));
}

}  // namespace

Generated generate(const GeneratorSpec& spec) {
  if (spec.m < 1) throw InputError("generate: m must be at least 1");
  if (spec.n < 1) throw InputError("generate: n must be at least 1");
  Rng rng(spec.seed);
  std::vector<PreferenceOrder> voters;
  voters.reserve(spec.n);
  switch (spec.model) {
    case GeneratorModel::impartial_culture: {
      for (int v = 0; v < spec.n; ++v) voters.emplace_back(rng.permutation(spec.m));
      return {Election(spec.m, std::move(voters)), std::nullopt, std::nullopt};
    }
    case GeneratorModel::single_peaked: {
      Axis axis = spec.axis ? *spec.axis : Axis{PreferenceOrder(rng.permutation(spec.m))};
      if (axis.order.size() != spec.m) throw InputError("generate: axis size differs from m");
      for (int v = 0; v < spec.n; ++v) voters.push_back(single_peaked_vote(rng, axis));
      return {Election(spec.m, std::move(voters)), axis, std::nullopt};
    }
    case GeneratorModel::euclidean_1d: {
      // Alternatives sit on multiples of 4, voters on odd integers: no voter is equidistant.
      const auto slot = rng.permutation(spec.m);
      EuclideanEmbedding emb;
      emb.dimension = 1;
      for (int a = 0; a < spec.m; ++a) emb.alternatives.push_back({Rational(4 * slot[a])});
      for (int v = 0; v < spec.n; ++v) {
        const std::int64_t x = 2 * static_cast<std::int64_t>(rng.uniform_below(2 * spec.m + 1)) - 1;
        std::vector<Alternative> order(spec.m);
        for (int a = 0; a < spec.m; ++a) order[a] = a;
        auto dist = [&](int a) { return std::abs(x - 4 * static_cast<std::int64_t>(slot[a])); };
        std::sort(order.begin(), order.end(), [&](int a, int b) { return dist(a) < dist(b); });
        voters.emplace_back(std::move(order));
        emb.voters.push_back({Rational(x)});
      }
      return {Election(spec.m, std::move(voters)), std::nullopt, std::move(emb)};
    }
  }
  throw InputError("generate: unknown model");
}

}  // namespace parasoc
