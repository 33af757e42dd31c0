#include "wvg/constructions.hpp"

#include <algorithm>

#include "wvg/bounds.hpp"
#include "wvg/error.hpp"

namespace wvg {

namespace {

void require(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::BadParameters, what);
}

void require_range(bool condition, const std::string& what) {
  if (!condition) throw Error(Errc::OutOfRange, what);
}

// Largest k with k <= x, for positive rational x.
int floor_int(const Rational& x) { return static_cast<int>(x.floor().get_si()); }

int ceil_int(const Rational& x) {
  const int f = floor_int(x);
  return Rational(f) == x ? f : f + 1;
}

std::optional<Rational> completion_quota(const SimpleGame& v, const RationalVector& w) {
  const QuotaInterval iv = quota_interval(v, w);
  if (iv.degenerate()) return std::nullopt;
  return iv.midpoint();
}

ConstructionWitness finish(ConstructionWitness w) {
  w.l1_distance = l1_distance(w.w_a, w.w_b);
  w.linf_distance = linf_distance(w.w_a, w.w_b);
  w.verify();
  return w;
}

// The endpoint of a witness pair farther from w in the given norm; ties go to w_a.
const RationalVector& farther(const ConstructionWitness& pair, const RationalVector& w, Norm norm) {
  auto dist = [&](const RationalVector& x) { return norm == Norm::L1 ? l1_distance(w, x) : linf_distance(w, x); };
  return dist(pair.w_b) > dist(pair.w_a) ? pair.w_b : pair.w_a;
}

}  // namespace

VkstGame make_vkst(int k, int s, int t) {
  require(s >= 1 && k >= 1 && k <= s, "v_{k,s,t} needs 1 <= k <= s");
  require(t >= 0 && s + t <= kMaxPlayers, "v_{k,s,t} needs t >= 0 and s + t <= 24");
  RationalVector w(static_cast<std::size_t>(s + t), Rational(0));
  std::fill(w.begin(), w.begin() + s, Rational(1));
  WeightedRepresentation rep(Rational(k), std::move(w));
  SimpleGame game = realize(rep);
  return {std::move(game), std::move(rep)};
}

void ConstructionWitness::verify() const {
  auto fail = [&](const std::string& what) {
    throw Error(Errc::PreconditionViolated, construction + " certificate: " + what);
  };
  const auto n = static_cast<std::size_t>(game.n());
  if (w_a.size() != n || w_b.size() != n) fail("vector length differs from player count");
  const WeightPolytope p(game);
  if (!membership(p, w_a)) fail("w_a is not in the weight polytope");
  if (!membership(p, w_b)) fail("w_b is not in the weight polytope");
  if (quota_a && !(realize(WeightedRepresentation(*quota_a, w_a)) == game)) fail("[quota_a; w_a] is another game");
  if (quota_b && !(realize(WeightedRepresentation(*quota_b, w_b)) == game)) fail("[quota_b; w_b] is another game");
  if (l1_distance != wvg::l1_distance(w_a, w_b)) fail("stored L1 distance is wrong");
  if (linf_distance != wvg::linf_distance(w_a, w_b)) fail("stored Linf distance is wrong");
  if (guaranteed_l1 && l1_distance < *guaranteed_l1) fail("L1 distance below the guarantee");
  if (guaranteed_linf && linf_distance < *guaranteed_linf) fail("Linf distance below the guarantee");
  if (keeps_delta_a && (!params.delta || max_weight(w_a) != *params.delta)) fail("w_a lost the maximum weight");
  if (keeps_delta_b && (!params.delta || max_weight(w_b) != *params.delta)) fail("w_b lost the maximum weight");
}

ConstructionWitness lemma31_witness(int k, int s, int t, Norm variant) {
  require(k >= 1 && k < s, "needs 1 <= k < s; use lemma32 for k = s");
  VkstGame g = make_vkst(k, s, t);
  const auto n = static_cast<std::size_t>(s + t);
  const Rational unit(1, s);

  ConstructionWitness w;
  w.construction = "lemma31";
  w.variant = variant;
  w.params.k = k;
  w.params.s = s;
  w.params.t = t;
  w.w_a.assign(n, Rational(0));
  w.w_b.assign(n, Rational(0));

  if (variant == Norm::L1) {
    const Rational gamma = 2 * k <= s + 1 ? Rational(1, s * (2 * k - 1)) : Rational(1, s * (2 * s + 3 - 2 * k));
    w.params.gamma = gamma;
    const int heavy = s / 2;  // |S_1| = |S_-1|
    for (int i = 0; i < s; ++i) {
      Rational x = unit;
      if (i < heavy) x += gamma;
      if (i >= s - heavy) x -= gamma;
      w.w_a[static_cast<std::size_t>(i)] = x;
    }
    for (int i = 0; i < s; ++i) w.w_b[static_cast<std::size_t>(i)] = w.w_a[static_cast<std::size_t>(s - 1 - i)];
    w.guaranteed_l1 = max(Rational(1, 10 * k), Rational(1, 10 * (s - k)));
  } else {
    const Rational gamma(1, 2 * s);
    w.params.gamma = gamma;
    for (int i = 0; i < s; ++i) w.w_a[static_cast<std::size_t>(i)] = unit;
    w.w_b = w.w_a;
    w.w_a[0] = w.w_b[1] = unit + gamma;
    w.w_a[1] = w.w_b[0] = unit - gamma;
    w.guaranteed_linf = unit;
  }
  w.game = std::move(g.game);
  w.quota_a = completion_quota(w.game, w.w_a);
  w.quota_b = completion_quota(w.game, w.w_b);
  return finish(std::move(w));
}

ConstructionWitness lemma32_witness(int s, int t) {
  require(s >= 1 && t >= 0 && s + t >= 2, "needs s >= 1, t >= 0 and s + t >= 2");
  VkstGame g = make_vkst(s, s, t);
  const auto n = static_cast<std::size_t>(s + t);

  ConstructionWitness w;
  w.construction = "lemma32";
  w.params.k = s;
  w.params.s = s;
  w.params.t = t;
  w.w_a.assign(n, Rational(0));
  w.w_b.assign(n, Rational(0));
  if (s >= 2) {
    const Rational eps(1, 3 * s);
    w.params.epsilon = eps;
    w.w_a[0] = Rational(1) - Rational(s - 1) * eps;
    for (int i = 1; i < s; ++i) w.w_a[static_cast<std::size_t>(i)] = eps;
    for (int i = 0; i < s; ++i) w.w_b[static_cast<std::size_t>(i)] = w.w_a[static_cast<std::size_t>(s - 1 - i)];
  } else {
    w.w_a[0] = Rational(1);
    w.w_b[0] = Rational(2, 3);
    w.w_b[1] = Rational(1, 3);
  }
  w.guaranteed_l1 = Rational(2, 3);
  w.guaranteed_linf = Rational(1, 3);
  w.game = std::move(g.game);
  w.quota_a = completion_quota(w.game, w.w_a);
  w.quota_b = completion_quota(w.game, w.w_b);
  return finish(std::move(w));
}

ConstructionWitness lemma33_witness(const Rational& q, int n) {
  require_range(q.sign() > 0 && q <= Rational(1), "quota must lie in (0,1]");
  require_range(n >= 2 && n <= kMaxPlayers, "needs 2 <= n <= 24");
  const auto size = static_cast<std::size_t>(n);

  ConstructionWitness w;
  w.construction = "lemma33";
  w.params.q = q;
  w.params.n = n;
  w.w_a.assign(size, Rational(0));
  w.w_a[0] = Rational(2, 3);
  w.w_a[1] = Rational(1, 3);
  w.w_b.assign(size, Rational(0));
  if (Rational(1, 3) < q && q <= Rational(2, 3)) {
    w.w_b[0] = Rational(1);
  } else {
    w.w_b[0] = Rational(1, 3);
    w.w_b[1] = Rational(2, 3);
  }
  w.quota_a = w.quota_b = q;
  w.game = realize(WeightedRepresentation(q, w.w_a));
  w.guaranteed_l1 = Rational(2, 3);
  w.guaranteed_linf = Rational(1, 3);
  return finish(std::move(w));
}

ConstructionWitness lemma34_witness(const Rational& delta, int n) {
  require(delta.sign() > 0 && delta <= Rational(1), "maximum weight must lie in (0,1]");
  require(Rational(n) >= Rational(1) / delta + Rational(1) && n <= kMaxPlayers, "needs 1/delta + 1 <= n <= 24");
  const int s = floor_int(Rational(1) / delta);
  const int t = n - s;
  const auto size = static_cast<std::size_t>(n);

  RationalVector w(size, Rational(0));
  for (int i = 0; i < s; ++i) w[static_cast<std::size_t>(i)] = delta;
  w[static_cast<std::size_t>(s)] = Rational(1) - Rational(s) * delta;
  const Rational q = Rational(s) * delta;

  VkstGame g = make_vkst(s, s, t);
  if (!(realize(WeightedRepresentation(q, w)) == g.game)) {
    throw Error(Errc::PreconditionViolated, "[s delta; w] differs from v_{s,s,t}");
  }
  const ConstructionWitness pair = lemma32_witness(s, t);
  const RationalVector& far = farther(pair, w, Norm::Linf);
  const Rational budget = Rational(1, 6) - Rational(1, 7);
  const Completion anchor = representable_point(g.game);
  Completion moved = perturb_toward(far, anchor.weights, g.game, budget);

  ConstructionWitness out;
  out.construction = "lemma34";
  out.variant = Norm::Linf;
  out.game = std::move(g.game);
  out.w_a = std::move(w);
  out.quota_a = q;
  out.w_b = std::move(moved.weights);
  out.quota_b = moved.quota;
  out.guaranteed_linf = Rational(1, 7);
  out.guaranteed_l1 = Rational(2, 7);
  out.keeps_delta_a = true;
  out.params.delta = delta;
  out.params.q = q;
  out.params.k = s;
  out.params.s = s;
  out.params.t = t;
  out.params.n = n;
  out.params.epsilon = pair.params.epsilon;
  out.params.budget = budget;
  return finish(std::move(out));
}

ConstructionWitness lemma35_witness(const Rational& delta, int n) {
  require_range(delta.sign() > 0 && delta < Rational(1), "maximum weight must lie in (0,1)");
  require_range(n >= 2 && n <= kMaxPlayers, "needs 2 <= n <= 24");
  const auto size = static_cast<std::size_t>(n);
  const Rational one(1);

  ConstructionWitness w;
  w.construction = "lemma35";
  w.params.delta = delta;
  w.params.n = n;
  w.keeps_delta_a = w.keeps_delta_b = true;
  w.guaranteed_l1 = Rational(2, 3);
  w.guaranteed_linf = delta / Rational(2);
  w.w_a.assign(size, Rational(0));
  w.w_b.assign(size, Rational(0));
  auto put = [&](RationalVector& v, int player, const Rational& x) { v.at(static_cast<std::size_t>(player - 1)) = x; };
  Rational q;

  if (delta >= Rational(2, 3)) {
    // Two passers and n - 2 null players.
    q = one - delta;
    put(w.w_a, 1, delta);
    put(w.w_a, 2, one - delta);
    put(w.w_b, 1, one - delta);
    put(w.w_b, 2, delta);
  } else {
    const int a = floor_int(Rational(2) / (Rational(3) * delta));
    const Rational residual = Rational(1, 3) - Rational(a) * delta / Rational(2);
    if (Rational(3) * residual < delta / Rational(2)) {
      // 2a passers in swapped pairs (delta, delta/2); three residual null
      // players on odd positions for w_a and even positions for w_b.
      require_range(n >= 2 * a + 6, "needs n >= 2a + 6 players");
      q = delta / Rational(2);
      for (int i = 1; i <= a; ++i) {
        put(w.w_a, 2 * i - 1, delta);
        put(w.w_a, 2 * i, q);
        put(w.w_b, 2 * i, delta);
        put(w.w_b, 2 * i - 1, q);
      }
      for (int j : {1, 3, 5}) put(w.w_a, 2 * a + j, residual);
      for (int j : {2, 4, 6}) put(w.w_b, 2 * a + j, residual);
      w.params.a = a;
    } else {
      // The residual players together would reach the quota, so they would not
      // be null. Use a' = ceil(2/(3 delta)) swapped pairs (delta, 1/a' - delta)
      // covering all the weight, with the quota at the light weight.
      const int a2 = ceil_int(Rational(2) / (Rational(3) * delta));
      const Rational light = Rational(1, a2) - delta;
      if (light.sign() > 0) {
        require_range(n >= 2 * a2, "needs n >= 2a' players");
        q = light;
        for (int i = 1; i <= a2; ++i) {
          put(w.w_a, 2 * i - 1, delta);
          put(w.w_a, 2 * i, light);
          put(w.w_b, 2 * i, delta);
          put(w.w_b, 2 * i - 1, light);
        }
        w.params.a = a2;
      } else {
        // delta = 1/2: one swapped pair (1/2, 1/6) and two passers of weight 1/6.
        require_range(n >= 4, "needs n >= 4 players");
        q = Rational(1, 6);
        put(w.w_a, 1, delta);
        put(w.w_b, 2, delta);
        put(w.w_a, 2, q);
        put(w.w_b, 1, q);
        for (int i : {3, 4}) {
          put(w.w_a, i, q);
          put(w.w_b, i, q);
        }
        w.params.a = 1;
      }
    }
  }
  w.params.q = q;
  w.quota_a = w.quota_b = q;
  w.game = realize(WeightedRepresentation(q, w.w_a));
  return finish(std::move(w));
}

ConstructionWitness lemma36_witness(const Rational& q, const Rational& delta, int n, Norm variant) {
  require_range(q.sign() > 0 && q < Rational(1), "quota must lie in (0,1)");
  require_range(delta.sign() > 0 && delta <= Rational(1), "maximum weight must lie in (0,1]");
  require_range(Rational(n) >= Rational(1) / delta + Rational(2) && n <= kMaxPlayers, "needs 1/delta + 2 <= n <= 24");
  const auto size = static_cast<std::size_t>(n);
  const Rational one(1);

  const int a = floor_int(one / delta);
  const int b = ceil_int(q / delta) - 1;  // b delta < q <= (b + 1) delta
  const int k = b + 1;
  const Rational rest = one - Rational(a) * delta;
  RationalVector w(size, Rational(0));
  for (int i = 0; i < a; ++i) w[static_cast<std::size_t>(i)] = delta;
  w[static_cast<std::size_t>(a)] = rest;
  const int s = Rational(b) * delta + rest < q ? a : a + 1;
  const int t = n - s;

  VkstGame g = make_vkst(k, s, t);
  if (!(realize(WeightedRepresentation(q, w)) == g.game)) {
    throw Error(Errc::PreconditionViolated, "[q; w] differs from v_{k,s,t}");
  }
  const ConstructionWitness pair = k == s ? lemma32_witness(s, t) : lemma31_witness(k, s, t, variant);
  const RationalVector& far = farther(pair, w, variant);
  const Rational envelope = thm43_envelope(q, delta).basic;
  const Rational budget = variant == Norm::L1 ? (Rational(1, 160) - Rational(1, 200)) * envelope
                                              : delta / Rational(4) - delta / Rational(5);
  const Completion anchor = representable_point(g.game);
  Completion moved = perturb_toward(far, anchor.weights, g.game, budget);

  ConstructionWitness out;
  out.construction = "lemma36";
  out.variant = variant;
  out.game = std::move(g.game);
  out.w_a = std::move(w);
  out.quota_a = q;
  out.w_b = std::move(moved.weights);
  out.quota_b = moved.quota;
  if (variant == Norm::L1) {
    out.guaranteed_l1 = envelope / Rational(200);
  } else {
    out.guaranteed_linf = delta / Rational(5);
  }
  out.keeps_delta_a = true;
  out.params.q = q;
  out.params.delta = delta;
  out.params.n = n;
  out.params.a = a;
  out.params.b = b;
  out.params.k = k;
  out.params.s = s;
  out.params.t = t;
  out.params.gamma = pair.params.gamma;
  out.params.epsilon = pair.params.epsilon;
  out.params.budget = budget;
  return finish(std::move(out));
}

}  // namespace wvg
