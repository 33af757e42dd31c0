#pragma once

#include <random>

#include "wvg/game.hpp"
#include "wvg/polytope.hpp"
#include "wvg/rational.hpp"

namespace wvg::cli {

using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

/// p / den with den = max_den and p uniform in [1, den - 1]: a rational strictly inside (0, 1).
Rational open_unit(Rng& rng, int max_den = 97);

/// Non-negative integer entries in [0, max_entry], rescaled to sum one.
RationalVector random_normalized(Rng& rng, int n, int max_entry = 20);

/**
 * Normalized representation with integer weights in [0, max_entry] and an
 * integer quota strictly between 0 and the weight total, so 0 < q < 1.
 */
WeightedRepresentation random_representation(Rng& rng, int n, int max_entry = 10);

/**
 * A second normalized representation of the game: a random vertex of W(v)
 * mixed with the strict anchor, then a quota drawn from the open completion
 * interval.
 */
WeightedRepresentation random_secondary(Rng& rng, PolytopeOptimizer& optimizer, const SimpleGame& v,
                                        const Completion& anchor);

}  // namespace wvg::cli
