#include "wvg/power.hpp"

#include <bit>

#include "wvg/bounds.hpp"
#include "wvg/constructions.hpp"
#include "wvg/error.hpp"

namespace wvg {

namespace {

// swings[i][m] = number of coalitions S of size m without i where i is pivotal.
std::vector<std::vector<mpz_class>> swing_table(const SimpleGame& v) {
  const int n = v.n();
  std::vector<std::vector<std::uint64_t>> counts(static_cast<std::size_t>(n),
                                                 std::vector<std::uint64_t>(static_cast<std::size_t>(n), 0));
  const Coalition::Mask full = full_mask(n);
  for (Coalition::Mask m = 0; m <= full; ++m) {
    if (v.wins(m)) continue;
    const auto size = static_cast<std::size_t>(std::popcount(m));
    for (Coalition::Mask rest = full & ~m; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (v.wins(m | (Coalition::Mask{1} << i))) ++counts[static_cast<std::size_t>(i)][size];
    }
  }
  std::vector<std::vector<mpz_class>> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (auto c : counts[i]) out[i].emplace_back(static_cast<unsigned long>(c));
  }
  return out;
}

mpz_class factorial(int k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return f;
}

Rational coalition_value(std::span<const Rational> x, const Coalition& s) {
  Rational acc;
  for (int p : s.members()) acc += x[static_cast<std::size_t>(p)];
  return acc;
}

void require_normalized_rep(const WeightedRepresentation& rep) {
  if (!rep.is_normalized()) throw Error(Errc::NotNormalized, "representation is not normalized");
}

}  // namespace

const char* to_string(PowerIndex index) noexcept {
  switch (index) {
    case PowerIndex::ShapleyShubik: return "ssi";
    case PowerIndex::Banzhaf: return "pbi";
    case PowerIndex::BanzhafRaw: return "pbi_raw";
  }
  return "unknown";
}

PowerVector shapley_shubik(const SimpleGame& v) {
  const int n = v.n();
  const auto table = swing_table(v);
  const mpz_class total = factorial(n);
  PowerVector out{PowerIndex::ShapleyShubik, {}};
  for (const auto& row : table) {
    mpz_class acc = 0;
    for (int m = 0; m < n; ++m) {
      if (sgn(row[static_cast<std::size_t>(m)]) != 0) acc += row[static_cast<std::size_t>(m)] * factorial(m) * factorial(n - 1 - m);
    }
    out.values.emplace_back(acc, total);
  }
  return out;
}

PowerVector penrose_banzhaf(const SimpleGame& v, bool normalized) {
  const auto table = swing_table(v);
  std::vector<mpz_class> swings;
  mpz_class all = 0;
  for (const auto& row : table) {
    mpz_class c = 0;
    for (const auto& x : row) c += x;
    all += c;
    swings.push_back(c);
  }
  PowerVector out{normalized ? PowerIndex::Banzhaf : PowerIndex::BanzhafRaw, {}};
  mpz_class denominator = normalized ? all : mpz_class(1);
  if (!normalized) mpz_mul_2exp(denominator.get_mpz_t(), denominator.get_mpz_t(), static_cast<unsigned long>(v.n() - 1));
  for (const auto& c : swings) out.values.emplace_back(c, denominator);
  return out;
}

PowerVector power_index(const SimpleGame& v, PowerIndex index) {
  return index == PowerIndex::ShapleyShubik ? shapley_shubik(v) : penrose_banzhaf(v, index == PowerIndex::Banzhaf);
}

Compatibility representation_compatible(const SimpleGame& v, const PowerVector& phi) {
  if (phi.values.size() != static_cast<std::size_t>(v.n())) throw Error(Errc::DimensionMismatch, "power vector length");
  if (!phi.efficient()) throw Error(Errc::NotEfficient, "power vector does not sum to one");
  Compatibility out;
  std::optional<Coalition> heaviest;
  for (const auto& t : maximal_losing(v)) {
    Rational x = coalition_value(phi.values, t);
    if (!heaviest || out.max_losing < x) {
      out.max_losing = std::move(x);
      heaviest = t;
    }
  }
  std::optional<Coalition> lightest;
  for (const auto& s : minimal_winning(v)) {
    Rational x = coalition_value(phi.values, s);
    if (!lightest || x < out.min_winning) {
      out.min_winning = std::move(x);
      lightest = s;
    }
  }
  // Without losing coalitions every nonempty coalition wins; the empty one is the losing side.
  if (!heaviest) heaviest = Coalition::empty(v.n());
  out.compatible = out.max_losing < out.min_winning;
  if (out.compatible) {
    out.quota = (out.max_losing + out.min_winning) / Rational(2);
  } else {
    out.violation = std::make_pair(*heaviest, *lightest);
  }
  return out;
}

DistanceReport distance_report(const WeightedRepresentation& rep, const PowerVector& phi) {
  require_normalized_rep(rep);
  const Rational& q = rep.quota();
  if (q.sign() <= 0 || q >= Rational(1)) throw Error(Errc::OutOfRange, "quota must lie in (0,1)");
  DistanceReport out;
  out.l1 = l1_distance(rep.weights(), phi.values);
  out.linf = linf_distance(rep.weights(), phi.values);
  if (phi.efficient() && representation_compatible(realize(rep), phi).compatible) {
    out.bound = Rational(4) * max_weight(rep.weights()) / min(q, Rational(1) - q);
    out.within_bound = out.l1 <= *out.bound;
  }
  return out;
}

PairBound pair_lower_bound(const WeightedRepresentation& a, const WeightedRepresentation& b, const PowerVector& phi,
                           Norm norm) {
  require_normalized_rep(a);
  require_normalized_rep(b);
  if (a.n() != b.n() || phi.values.size() != a.weights().size()) {
    throw Error(Errc::DimensionMismatch, "representations and power vector must share n");
  }
  if (!(realize(a) == realize(b))) throw Error(Errc::GamesDiffer, "the representations define different games");
  auto dist = [&](std::span<const Rational> x, std::span<const Rational> y) {
    return norm == Norm::L1 ? l1_distance(x, y) : linf_distance(x, y);
  };
  PairBound out;
  out.bound = dist(a.weights(), b.weights()) / Rational(2);
  out.distance = max(dist(a.weights(), phi.values), dist(b.weights(), phi.values));
  out.holds = out.distance >= out.bound;
  return out;
}

LowerBoundRecord prop54_harness(const Rational& q, const Rational& delta, int n, PowerIndex index) {
  const ConstructionWitness base = lemma36_witness(q, delta, n, Norm::L1);
  LowerBoundRecord r;
  r.q = q;
  r.delta = delta;
  r.n = n;
  r.index = index;
  r.k = *base.params.k;
  r.s = *base.params.s;
  r.t = *base.params.t;
  r.w = base.w_a;
  r.envelope = thm43_envelope(q, delta).basic;
  r.lambda = r.envelope / Rational(80);

  const ConstructionWitness pair = r.k == r.s ? lemma32_witness(r.s, r.t) : lemma31_witness(r.k, r.s, r.t, Norm::L1);
  r.w_first = pair.w_a;
  r.w_second = pair.w_b;
  r.pair_distance = pair.l1_distance;
  r.phi = power_index(base.game, index);
  r.first_distance = l1_distance(r.w_first, r.phi.values);
  r.second_distance = l1_distance(r.w_second, r.phi.values);
  const RationalVector& chosen = r.second_distance > r.first_distance ? r.w_second : r.w_first;

  r.certified = r.envelope / Rational(200);
  const Completion anchor = representable_point(base.game);
  Completion moved = perturb_toward(chosen, anchor.weights, base.game, r.lambda / Rational(2) - r.certified);
  r.w_bar = std::move(moved.weights);
  r.quota_bar = moved.quota;
  r.final_distance = l1_distance(r.w_bar, r.phi.values);
  r.holds = r.pair_distance >= r.lambda && max(r.first_distance, r.second_distance) >= r.lambda / Rational(2) &&
            r.final_distance >= r.certified &&
            realize(WeightedRepresentation(r.quota_bar, r.w_bar)) == base.game;
  return r;
}

}  // namespace wvg
