#pragma once

#include <optional>
#include <utility>

#include "wvg/game.hpp"
#include "wvg/polytope.hpp"
#include "wvg/rational.hpp"

namespace wvg {

enum class PowerIndex { ShapleyShubik, Banzhaf, BanzhafRaw };

/// "ssi", "pbi" or "pbi_raw".
const char* to_string(PowerIndex index) noexcept;

struct PowerVector {
  PowerIndex index = PowerIndex::ShapleyShubik;
  RationalVector values;

  bool efficient() const { return sum(values) == Rational(1); }
};

/// Sum over swings of |S|!(n-1-|S|)!/n!.
PowerVector shapley_shubik(const SimpleGame& v);
/// Swing counts over 2^(n-1), or rescaled to sum one when normalized.
PowerVector penrose_banzhaf(const SimpleGame& v, bool normalized);
PowerVector power_index(const SimpleGame& v, PowerIndex index);

struct Compatibility {
  bool compatible = false;
  Rational max_losing;
  Rational min_winning;
  std::optional<Rational> quota;  // midpoint when compatible
  /// A losing T and winning S with phi(T) >= phi(S), when not compatible.
  std::optional<std::pair<Coalition, Coalition>> violation;
};

/// Whether the power vector completes to a representation of v. Throws NotEfficient.
Compatibility representation_compatible(const SimpleGame& v, const PowerVector& phi);

struct DistanceReport {
  Rational l1;
  Rational linf;
  /// 4 Delta(w) / min{q, 1 - q}, only when phi is representation compatible.
  std::optional<Rational> bound;
  bool within_bound = true;
};

/// Distances between normalized weights and a power vector of the same
/// game. Throws NotNormalized, OutOfRange (q not in (0,1)), DimensionMismatch.
DistanceReport distance_report(const WeightedRepresentation& rep, const PowerVector& phi);

struct PairBound {
  Rational bound;     // |w_a - w_b| / 2
  Rational distance;  // max{|w_a - phi|, |w_b - phi|}
  bool holds = false;
};

/// Triangle-inequality bound for two normalized representations of one game.
/// Throws GamesDiffer, NotNormalized, DimensionMismatch.
PairBound pair_lower_bound(const WeightedRepresentation& a, const WeightedRepresentation& b, const PowerVector& phi,
                           Norm norm);

/**
 * Builds the game of the envelope construction for (q, delta, n), a far
 * pair w', w'' of its weight polytope with |w' - w''|_1 >= Lambda, picks the
 * one farther from phi, moves it into the interior and certifies the
 * distance to phi against envelope / 200.
 */
struct LowerBoundRecord {
  Rational q;
  Rational delta;
  int n = 0;
  PowerIndex index = PowerIndex::ShapleyShubik;
  int k = 0, s = 0, t = 0;
  RationalVector w;
  Rational envelope;
  Rational lambda;
  RationalVector w_first;
  RationalVector w_second;
  Rational pair_distance;
  PowerVector phi;
  Rational first_distance;
  Rational second_distance;
  RationalVector w_bar;
  Rational quota_bar;
  Rational final_distance;
  Rational certified;
  bool holds = false;
};

/// Throws OutOfRange outside the envelope construction's domain.
LowerBoundRecord prop54_harness(const Rational& q, const Rational& delta, int n, PowerIndex index);

}  // namespace wvg
