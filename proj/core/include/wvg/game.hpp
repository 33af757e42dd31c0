#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wvg/coalition.hpp"
#include "wvg/rational.hpp"

namespace wvg {

/**
 * Simple game on n players: a monotone 0/1 function on coalitions with
 * v(empty) = 0 and v(N) = 1. Stored as an explicit 2^n bitmap, so n is
 * limited to kMaxPlayers. Immutable once constructed.
 */
class SimpleGame {
 public:
  /// Builds from a predicate on masks. Throws InvalidGame if the result is
  /// not a simple game and TooManyPlayers if n > kMaxPlayers.
  static SimpleGame from_predicate(int n, const std::function<bool(Coalition::Mask)>& wins);
  /// Upward closure of the given (not necessarily minimal) winning coalitions.
  static SimpleGame from_winning_generators(int n, const std::vector<Coalition>& generators);

  int n() const noexcept { return n_; }
  bool wins(Coalition::Mask mask) const noexcept { return (bits_[mask >> 6] >> (mask & 63)) & 1U; }
  bool wins(const Coalition& s) const noexcept { return wins(s.mask()); }

  friend bool operator==(const SimpleGame&, const SimpleGame&) = default;

 private:
  SimpleGame(int n, std::vector<std::uint64_t> bits) : n_(n), bits_(std::move(bits)) {}
  void validate() const;

  int n_ = 0;
  std::vector<std::uint64_t> bits_;
};

/**
 * A quota together with a non-negative weight vector. Invariant:
 * 0 < quota <= sum of weights.
 */
class WeightedRepresentation {
 public:
  /// Throws InvalidRepresentation when the invariant fails.
  WeightedRepresentation(Rational quota, RationalVector weights);

  int n() const noexcept { return static_cast<int>(weights_.size()); }
  const Rational& quota() const noexcept { return quota_; }
  const RationalVector& weights() const noexcept { return weights_; }
  const Rational& weight(int player) const { return weights_.at(static_cast<std::size_t>(player)); }
  Rational total() const { return sum(weights_); }
  /// Weight sum is exactly one.
  bool is_normalized() const { return total() == Rational(1); }
  /// Divides quota and weights by the weight total.
  WeightedRepresentation normalized() const;

  Rational weight_of(const Coalition& s) const;

 private:
  Rational quota_;
  RationalVector weights_;
};

enum class Outcome { Losing, Winning };

Outcome evaluate(const WeightedRepresentation& rep, const Coalition& s);
/// The game [q; w]. Throws TooManyPlayers for n > kMaxPlayers.
SimpleGame realize(const WeightedRepresentation& rep);

std::vector<Coalition> minimal_winning(const SimpleGame& v);
std::vector<Coalition> maximal_losing(const SimpleGame& v);
/// v^d(S) = 1 - v(N \ S).
SimpleGame dual(const SimpleGame& v);

/// Smallest q - w(S) over losing coalitions S of [q; w].
Rational min_losing_slack(const WeightedRepresentation& rep);

/// Normalized representation (1 - q + epsilon; w) of the dual game. The
/// epsilon defaults to half of min_losing_slack. Throws NotNormalized,
/// OutOfRange (epsilon <= 0) or EpsilonTooLarge.
WeightedRepresentation dual_representation(const WeightedRepresentation& rep,
                                           std::optional<Rational> epsilon = std::nullopt);

enum class PlayerRole { Null, Passer, Neither };

struct PlayerClassification {
  std::vector<PlayerRole> roles;
  /// Equivalence classes of 0-based players, each sorted, ordered by first member.
  std::vector<std::vector<int>> classes;

  int class_of(int player) const;
};

bool is_null_player(const SimpleGame& v, int player);
bool are_equivalent(const SimpleGame& v, int i, int j);
PlayerClassification classify_players(const SimpleGame& v);

}  // namespace wvg
