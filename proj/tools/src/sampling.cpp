#include "wvg/cli/sampling.hpp"

namespace wvg::cli {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational open_unit(Rng& rng, int max_den) { return Rational(uniform_int(rng, 1, max_den - 1), max_den); }

RationalVector random_normalized(Rng& rng, int n, int max_entry) {
  std::vector<int> raw(static_cast<std::size_t>(n));
  int total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : raw) total += (x = uniform_int(rng, 0, max_entry));
  }
  RationalVector w;
  w.reserve(raw.size());
  for (int x : raw) w.emplace_back(x, total);
  return w;
}

WeightedRepresentation random_representation(Rng& rng, int n, int max_entry) {
  std::vector<int> raw(static_cast<std::size_t>(n));
  int total = 0;
  while (total < 2) {
    total = 0;
    for (auto& x : raw) total += (x = uniform_int(rng, 0, max_entry));
  }
  const int quota = uniform_int(rng, 1, total - 1);
  RationalVector w;
  for (int x : raw) w.emplace_back(x, total);
  return WeightedRepresentation(Rational(quota, total), std::move(w));
}

WeightedRepresentation random_secondary(Rng& rng, PolytopeOptimizer& optimizer, const SimpleGame& v,
                                        const Completion& anchor) {
  RationalVector objective;
  for (int i = 0; i < v.n(); ++i) objective.emplace_back(uniform_int(rng, -6, 6));
  optimizer.maximize(objective);
  const RationalVector vertex = optimizer.argmax();

  // Any positive share of the strict anchor keeps the mix strictly separating.
  const Rational lambda = open_unit(rng, 16);
  RationalVector w;
  for (std::size_t i = 0; i < vertex.size(); ++i) {
    w.push_back((Rational(1) - lambda) * vertex[i] + lambda * anchor.weights[i]);
  }
  const QuotaInterval iv = quota_interval(v, w);
  const Rational quota = iv.max_losing + open_unit(rng, 16) * (iv.min_winning - iv.max_losing);
  return WeightedRepresentation(quota, std::move(w));
}

}  // namespace wvg::cli
