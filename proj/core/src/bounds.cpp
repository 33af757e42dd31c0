#include "wvg/bounds.hpp"

#include "wvg/error.hpp"

namespace wvg {

namespace {

void require_normalized(std::span<const Rational> w) {
  if (w.empty()) throw Error(Errc::NotNormalized, "weight vector is empty");
  for (const auto& x : w) {
    if (x.sign() < 0) throw Error(Errc::NotNormalized, "weight vector has a negative entry");
  }
  if (sum(w) != Rational(1)) throw Error(Errc::NotNormalized, "weights do not sum to one");
}

void require_quota_and_delta(const Rational& q, const Rational& delta) {
  if (q.sign() <= 0 || q >= Rational(1)) throw Error(Errc::OutOfRange, "quota must lie in (0,1)");
  if (delta.sign() <= 0 || delta > Rational(1)) throw Error(Errc::OutOfRange, "maximum weight must lie in (0,1]");
}

}  // namespace

Rational max_weight(std::span<const Rational> w) {
  require_normalized(w);
  Rational best = w[0];
  for (const auto& x : w) best = max(best, x);
  return best;
}

Rational laakso_taagepera(std::span<const Rational> w) {
  Rational total;
  Rational squares;
  for (const auto& x : w) {
    if (x.sign() < 0) throw Error(Errc::OutOfRange, "negative entry");
    total += x;
    squares += x * x;
  }
  if (squares.is_zero()) throw Error(Errc::ZeroVector, "index of the zero vector is undefined");
  return total * total / squares;
}

LaaksoBounds laakso_bounds(std::span<const Rational> w) {
  LaaksoBounds b;
  b.delta = max_weight(w);
  b.value = laakso_taagepera(w);
  const Rational inv = Rational(1) / b.delta;
  b.alpha = inv - Rational(inv.floor(), mpz_class(1));
  if (w.size() == 1) {
    b.lower_loose = b.lower = b.upper = b.upper_loose = Rational(1);
    return b;
  }
  const Rational one(1);
  const auto n = static_cast<long>(w.size());
  b.lower_loose = inv;
  b.lower = one / (b.delta * (one - b.alpha * (one - b.alpha) * b.delta));
  b.upper = one / (b.delta * b.delta + (one - b.delta) * (one - b.delta) / Rational(n - 1));
  b.upper_loose = inv * inv;
  return b;
}

Envelope thm43_envelope(const Rational& q, const Rational& delta) {
  require_quota_and_delta(q, delta);
  const Rational one(1);
  Envelope e;
  e.basic = min(Rational(2), Rational(4) * delta / min(q, one - q));
  if (q > delta) e.refined = Rational(2) * delta / min(q - delta, one - q);
  return e;
}

Rational lemma41_bound(const Rational& q, const Rational& delta) {
  require_quota_and_delta(q, delta);
  return Rational(2) * delta / min(q + delta, Rational(1) - q);
}

Lemma42Bound lemma42_bound(const Rational& q, const Rational& delta) {
  require_quota_and_delta(q, delta);
  const Rational one(1);
  Lemma42Bound b;
  b.loose = Rational(4) * delta / min(q, one - q);
  if (q > delta) b.refined = Rational(2) * delta / min(q - delta, one - q + delta);
  return b;
}

ConstrainedDistance check_constrained_distance(const WeightedRepresentation& rep, std::span<const Rational> x,
                                               Side side) {
  if (!rep.is_normalized()) throw Error(Errc::NotNormalized, "representation is not normalized");
  if (x.size() != rep.weights().size()) throw Error(Errc::DimensionMismatch, "x has the wrong length");
  require_normalized(x);
  const Rational delta = max_weight(rep.weights());
  const Rational& q = rep.quota();

  ConstrainedDistance out;
  if (side == Side::Winning) {
    out.bound = lemma41_bound(q, delta);
  } else {
    const Lemma42Bound b = lemma42_bound(q, delta);
    out.bound = b.refined ? min(b.loose, *b.refined) : b.loose;
  }

  const int n = rep.n();
  const SimpleGame v = realize(rep);
  for (Coalition::Mask m = 0; m <= full_mask(n); ++m) {
    if (v.wins(m) != (side == Side::Winning)) continue;
    const Coalition s(n, m);
    Rational xs;
    for (int p : s.members()) xs += x[static_cast<std::size_t>(p)];
    if (side == Side::Winning ? xs < q : xs > q) {
      throw Error(Errc::PreconditionViolated, "x violates the side condition on coalition " + s.str());
    }
  }

  out.distance = l1_distance(rep.weights(), x);
  out.holds = out.distance <= out.bound;
  return out;
}

BoundReport bound_report(const WeightedRepresentation& rep) {
  if (!rep.is_normalized()) throw Error(Errc::NotNormalized, "representation is not normalized");
  BoundReport r;
  r.q = rep.quota();
  const LaaksoBounds lb = laakso_bounds(rep.weights());
  r.delta = lb.delta;
  r.alpha = lb.alpha;
  r.laakso = lb.value;
  const Envelope e = thm43_envelope(r.q, r.delta);
  r.thm43_basic = e.basic;
  r.thm43_refined = e.refined;
  r.lemma41 = lemma41_bound(r.q, r.delta);
  r.lemma42 = lemma42_bound(r.q, r.delta).refined;
  return r;
}

}  // namespace wvg
