#pragma once

#include <optional>
#include <string>

#include "wvg/game.hpp"
#include "wvg/polytope.hpp"
#include "wvg/rational.hpp"

namespace wvg {

/// v_{k,s,t} = [k; 1,...,1, 0,...,0] with s unit weights and t zero weights.
struct VkstGame {
  SimpleGame game;
  WeightedRepresentation representation;
};

/// Throws BadParameters unless 1 <= k <= s, t >= 0 and s + t <= kMaxPlayers.
VkstGame make_vkst(int k, int s, int t);

/// Parameters used by a construction; unused entries stay empty.
struct ConstructionParams {
  std::optional<int> k, s, t, a, b, n;
  std::optional<Rational> gamma, epsilon, delta, q, budget;
};

/**
 * Two weight vectors of one game together with their exact distances and
 * the distances the construction promises. Quotas are present whenever the
 * vector completes to a representation of the game; vectors on the boundary
 * of the weight polytope have none.
 */
struct ConstructionWitness {
  std::string construction;
  Norm variant = Norm::L1;
  SimpleGame game = SimpleGame::from_predicate(1, [](Coalition::Mask m) { return m != 0; });
  RationalVector w_a;
  std::optional<Rational> quota_a;
  RationalVector w_b;
  std::optional<Rational> quota_b;
  Rational l1_distance;
  Rational linf_distance;
  std::optional<Rational> guaranteed_l1;
  std::optional<Rational> guaranteed_linf;
  /// The maximum weight params.delta is attained by w_a (and by w_b).
  bool keeps_delta_a = false;
  bool keeps_delta_b = false;
  ConstructionParams params;

  /// Re-checks every invariant exactly; throws PreconditionViolated naming the first failure.
  void verify() const;
};

/// Permutation pair in W(v_{k,s,t}) for 1 <= k < s. Throws BadParameters.
ConstructionWitness lemma31_witness(int k, int s, int t, Norm variant = Norm::L1);
/// Pair in W(v_{s,s,t}) for s >= 1, t >= 0, s + t >= 2. Throws BadParameters.
ConstructionWitness lemma32_witness(int s, int t);
/// Two representations of one game with quota q in (0,1] on n >= 2 players. Throws OutOfRange.
ConstructionWitness lemma33_witness(const Rational& q, int n);
/// Representation with maximum weight delta and a perturbed second one. Throws BadParameters.
ConstructionWitness lemma34_witness(const Rational& delta, int n);
/// Equal-quota pair with maximum weight delta on both sides, delta in (0,1). Throws OutOfRange.
ConstructionWitness lemma35_witness(const Rational& delta, int n);
/// Pair realizing [q; w] with maximum weight delta at distance tied to the
/// upper envelope. Throws OutOfRange.
ConstructionWitness lemma36_witness(const Rational& q, const Rational& delta, int n, Norm variant = Norm::L1);

}  // namespace wvg
