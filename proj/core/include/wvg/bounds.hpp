#pragma once

#include <optional>
#include <span>

#include "wvg/game.hpp"
#include "wvg/rational.hpp"

namespace wvg {

/// Largest entry of a normalized weight vector. Throws NotNormalized.
Rational max_weight(std::span<const Rational> w);

/// (sum w)^2 / sum w^2 for a non-negative, non-zero vector. Throws ZeroVector
/// for the zero vector and OutOfRange for a negative entry.
Rational laakso_taagepera(std::span<const Rational> w);

/// The four-term chain around L(w), with alpha = 1/Delta - floor(1/Delta).
struct LaaksoBounds {
  Rational delta;
  Rational alpha;
  Rational lower_loose;  // 1/Delta
  Rational lower;        // 1/(Delta(1 - alpha(1 - alpha)Delta))
  Rational value;        // L(w)
  Rational upper;        // 1/(Delta^2 + (1 - Delta)^2/(n - 1))
  Rational upper_loose;  // 1/Delta^2

  bool chain_holds() const {
    return lower_loose <= lower && lower <= value && value <= upper && upper <= upper_loose;
  }
};

/// Throws NotNormalized. For n = 1 every entry equals 1.
LaaksoBounds laakso_bounds(std::span<const Rational> w);

struct Envelope {
  Rational basic;                   // min{2, 4 Delta / min{q, 1 - q}}
  std::optional<Rational> refined;  // 2 Delta / min{q - Delta, 1 - q}, only when q > Delta
};

/// Throws OutOfRange unless 0 < q < 1 and 0 < delta <= 1.
Envelope thm43_envelope(const Rational& q, const Rational& delta);

/// 2 Delta / min{q + Delta, 1 - q}. Throws OutOfRange.
Rational lemma41_bound(const Rational& q, const Rational& delta);

struct Lemma42Bound {
  Rational loose;                   // 4 Delta / min{q, 1 - q}
  std::optional<Rational> refined;  // 2 Delta / min{q - Delta, 1 - q + Delta}, only when q > Delta
};

/// Throws OutOfRange.
Lemma42Bound lemma42_bound(const Rational& q, const Rational& delta);

enum class Side { Winning, Losing };

struct ConstrainedDistance {
  bool holds = false;
  Rational distance;  // |w - x|_1
  Rational bound;
};

/**
 * Distance from the weights of a normalized representation to a normalized
 * x that keeps every winning coalition at weight >= q (Side::Winning) or
 * every losing coalition at weight <= q (Side::Losing). The side condition
 * is checked over all coalitions; a failure throws PreconditionViolated.
 * The winning side uses lemma41_bound; the losing side uses the smaller of
 * the two lemma42_bound values. Also throws NotNormalized, OutOfRange.
 */
ConstrainedDistance check_constrained_distance(const WeightedRepresentation& rep, std::span<const Rational> x,
                                               Side side);

struct BoundReport {
  Rational q;
  Rational delta;
  Rational alpha;
  Rational laakso;
  Rational thm43_basic;
  std::optional<Rational> thm43_refined;
  Rational lemma41;
  std::optional<Rational> lemma42;
};

/// Every closed-form quantity for a normalized representation with 0 < q < 1.
BoundReport bound_report(const WeightedRepresentation& rep);

}  // namespace wvg
