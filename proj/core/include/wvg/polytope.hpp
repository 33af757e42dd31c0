#pragma once

#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wvg/game.hpp"
#include "wvg/lp.hpp"
#include "wvg/rational.hpp"

namespace wvg {

/**
 * Weight polytope of a simple game: all w >= 0 with sum 1 and
 * w(S) >= w(T) for every minimal winning S and maximal losing T.
 *
 * The pair rows are kept implicitly as the two coalition families; row k
 * is (winning_rows()[k / L], losing_rows()[k % L]) with L = |losing_rows()|.
 */
class WeightPolytope {
 public:
  explicit WeightPolytope(SimpleGame game);

  int n() const noexcept { return game_.n(); }
  const SimpleGame& game() const noexcept { return game_; }
  const std::vector<Coalition>& winning_rows() const noexcept { return winning_; }
  const std::vector<Coalition>& losing_rows() const noexcept { return losing_; }

  std::size_t pair_row_count() const noexcept { return winning_.size() * losing_.size(); }
  std::pair<Coalition, Coalition> pair_row(std::size_t k) const;

  /// All pair rows plus the simplex rows, as an explicit linear program
  /// (zero objective). Intended for small n.
  LinearProgram explicit_program() const;

 private:
  SimpleGame game_;
  std::vector<Coalition> winning_;
  std::vector<Coalition> losing_;
};

WeightPolytope build_polytope(const SimpleGame& v);

/// Exact test of every row. Throws DimensionMismatch on a wrong length.
bool membership(const WeightPolytope& p, std::span<const Rational> w);

struct WeightednessResult {
  bool weighted = false;
  /// Optimal strict-separation margin: min over S, T of w(S) - w(T).
  Rational margin;
  RationalVector weights;
};

/// Maximizes the separation margin over normalized weights; weighted iff margin > 0.
WeightednessResult is_weighted(const SimpleGame& v);

struct QuotaInterval {
  Rational max_losing;   // open end
  Rational min_winning;  // closed end
  bool degenerate() const { return !(max_losing < min_winning); }
  Rational midpoint() const { return (max_losing + min_winning) / Rational(2); }
};

/// Throws NotInPolytope when w is not in W(v).
QuotaInterval quota_interval(const SimpleGame& v, std::span<const Rational> w);

/// Normalized weights with a quota completing them to a representation of the game.
struct Completion {
  RationalVector weights;
  Rational quota;
  WeightedRepresentation representation() const { return WeightedRepresentation(quota, weights); }
};

/// Margin-maximizing weights with the midpoint quota. Throws NotWeighted.
Completion representable_point(const SimpleGame& v);

/// Moves w_from toward a strictly separating anchor by at most budget in the
/// L1 norm (and at most halfway). Throws BudgetZero, AnchorNotStrict,
/// NotInPolytope, DimensionMismatch.
Completion perturb_toward(std::span<const Rational> w_from, std::span<const Rational> anchor, const SimpleGame& v,
                          const Rational& budget);

enum class Norm { L1, Linf };
const char* to_string(Norm norm) noexcept;

struct DiameterCertificate {
  Norm norm = Norm::L1;
  Rational value;
  RationalVector witness_a;
  RationalVector witness_b;
};

/**
 * Repeated linear optimization over W(v), warm-started between objectives.
 * Internally works on (w, q) with rows w(T) <= q <= w(S), which projects
 * onto exactly the pair-row polytope.
 */
class PolytopeOptimizer {
 public:
  /// Throws EmptyPolytope when W(v) is empty.
  explicit PolytopeOptimizer(const WeightPolytope& p);
  ~PolytopeOptimizer();
  PolytopeOptimizer(PolytopeOptimizer&&) noexcept;
  PolytopeOptimizer& operator=(PolytopeOptimizer&&) noexcept;

  int n() const noexcept { return n_; }
  /// max objective . w over W(v); the optimizer is left at the maximizing vertex.
  Rational maximize(std::span<const Rational> objective);
  /// Weight part of the current vertex.
  RationalVector argmax() const;
  std::size_t pivot_count() const;

 private:
  int n_;
  std::unique_ptr<VertexSimplex> simplex_;
};

/// Largest L1 dimension the sign-pattern search accepts.
inline constexpr int kMaxL1Players = 16;

/// Exact L1 diameter. Throws EmptyPolytope, TooManyPlayers (n > 16).
DiameterCertificate diameter_l1(const SimpleGame& v);
DiameterCertificate diameter_l1(const WeightPolytope& p);
/// Exact L-infinity diameter. Throws EmptyPolytope.
DiameterCertificate diameter_linf(const SimpleGame& v);
DiameterCertificate diameter_linf(const WeightPolytope& p);

}  // namespace wvg
