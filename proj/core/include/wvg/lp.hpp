#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "wvg/rational.hpp"

namespace wvg {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  RationalVector coefficients;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/**
 * maximize objective . x subject to the constraints and x_j >= lower_bound_j.
 *
 * lower_bounds may be empty (every variable >= 0); otherwise it has one
 * entry per variable and std::nullopt marks a free variable.
 */
struct LinearProgram {
  RationalVector objective;
  std::vector<Constraint> constraints;
  std::vector<std::optional<Rational>> lower_bounds;

  std::size_t variable_count() const noexcept { return objective.size(); }
  void add(RationalVector coefficients, Relation relation, Rational rhs) {
    constraints.push_back({std::move(coefficients), relation, std::move(rhs)});
  }
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

struct LPOutcome {
  LPStatus status = LPStatus::Infeasible;
  Rational value;      // meaningful when Optimal
  RationalVector point;  // meaningful when Optimal
};

/// Two-phase dense tableau simplex with Bland's rule, exact arithmetic.
/// Throws MalformedProgram on dimension mismatch.
LPOutcome solve(const LinearProgram& lp);

/// Any exact feasible point, or nullopt when the constraints are infeasible.
std::optional<RationalVector> feasibility(const LinearProgram& lp);

/// Exact check that point satisfies every constraint and lower bound.
bool satisfies(const LinearProgram& lp, std::span<const Rational> point);

const char* to_string(LPStatus status) noexcept;

/// Sparse integer row  sum_j coef_j x_{index_j}  (relation)  rhs.
struct IntegerRow {
  std::vector<std::pair<int, long>> terms;
  long rhs = 0;
};

/**
 * Active-set simplex for inequality-form programs
 *
 *     maximize c.x  subject to  A x <= b,  E x = f,  x in R^d
 *
 * with integer data and a bounded (hence pointed) feasible region. The
 * current vertex and its basis of d linearly independent tight rows are
 * retained between calls, so re-optimizing after an objective change
 * starts from the previous optimum. This is the dual simplex method on the
 * standard-form dual program. The leaving row is the one with the most
 * negative multiplier, except after a degenerate step, where Bland's
 * smallest-index rule takes over until the objective moves again; the
 * blocking row is always the smallest index among the ties. Together this
 * rules out cycling on degenerate vertices.
 */
class VertexSimplex {
 public:
  VertexSimplex(int dimension, std::vector<IntegerRow> inequalities, std::vector<IntegerRow> equalities);

  int dimension() const noexcept { return dim_; }

  /// Moves from a feasible point to a vertex (crossover). Throws
  /// PreconditionViolated if the point is infeasible or the region contains a line.
  void start_from(std::span<const Rational> feasible_point);

  /// Re-optimizes from the current vertex. Requires start_from first.
  LPStatus maximize(std::span<const Rational> objective);

  const RationalVector& point() const noexcept { return x_; }
  Rational value(std::span<const Rational> objective) const;
  std::size_t pivot_count() const noexcept { return pivots_; }

 private:
  struct Row {
    std::vector<std::pair<int, long>> terms;
    mpz_class rhs;
  };

  void recompute_inverse();
  void recompute_point();
  std::ptrdiff_t ratio_test(std::size_t kpos, mpz_class& best_slack, mpz_class& best_ad);

  int dim_;
  std::vector<Row> rows_;        // equalities first, then inequalities
  std::size_t equality_count_;
  std::vector<int> basis_;       // row indices, one per basis position
  std::vector<char> in_basis_;
  // B^-1 = adjugate_ / det_, with B the matrix of basis rows. d x d, row-major,
  // rows indexed by variable, column k pairs with basis_[k].
  std::vector<mpz_class> adjugate_;
  mpz_class det_;
  std::vector<mpz_class> scaled_x_;  // x = scaled_x_ / |det_|
  // Floating-point copy of the rows in compressed form for the ratio test filter.
  std::vector<std::size_t> row_start_;
  std::vector<int> col_f_;
  std::vector<double> coef_f_;
  std::vector<double> rhs_f_;
  RationalVector x_;
  std::size_t pivots_ = 0;
  bool started_ = false;
};

}  // namespace wvg
