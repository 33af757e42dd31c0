#include "wvg/lp.hpp"

#include <limits>

#include "wvg/error.hpp"

namespace wvg {

namespace {

// Dense tableau over mpq_class. Columns: structural | slack/surplus | artificial | rhs.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)) {}

  mpq_class& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const { return cells_[r * (cols_ + 1) + c]; }
  mpq_class& rhs(std::size_t r) { return at(r, cols_); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  void pivot(std::size_t pr, std::size_t pc) {
    const mpq_class inv = 1 / at(pr, pc);
    for (std::size_t c = 0; c <= cols_; ++c) {
      if (sgn(at(pr, c)) != 0) at(pr, c) *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == pr) continue;
      const mpq_class f = at(r, pc);
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c <= cols_; ++c) {
        const mpq_class& p = at(pr, c);
        if (sgn(p) != 0) at(r, c) -= f * p;
      }
    }
  }

  void erase_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)),
                 cells_.begin() + static_cast<std::ptrdiff_t>((r + 1) * (cols_ + 1)));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> cells_;
};

struct ColumnMap {
  // Original variable j maps to column pos[j] (and neg[j] for free variables).
  std::vector<std::size_t> pos;
  std::vector<std::ptrdiff_t> neg;
  std::vector<mpq_class> offset;
};

void validate(const LinearProgram& lp) {
  const std::size_t n = lp.variable_count();
  for (const auto& c : lp.constraints) {
    if (c.coefficients.size() != n) throw Error(Errc::MalformedProgram, "constraint length differs from variable count");
  }
  if (!lp.lower_bounds.empty() && lp.lower_bounds.size() != n) {
    throw Error(Errc::MalformedProgram, "lower bound count differs from variable count");
  }
}

enum class Phase { Feasibility, Optimize };

class TwoPhaseSolver {
 public:
  explicit TwoPhaseSolver(const LinearProgram& lp) : lp_(lp) {}

  LPOutcome run(Phase last_phase) {
    build();
    // Phase 1: maximize -(sum of artificials).
    std::vector<mpq_class> phase1(total_cols_, 0);
    for (std::size_t c = artificial_begin_; c < total_cols_; ++c) phase1[c] = -1;
    if (iterate(phase1, /*allow_artificial=*/true) != LPStatus::Optimal) {
      throw Error(Errc::MalformedProgram, "phase 1 cannot be unbounded");  // unreachable
    }
    mpq_class infeasibility = 0;
    for (std::size_t r = 0; r < tab_.rows(); ++r) {
      if (basis_[r] >= artificial_begin_) infeasibility += tab_.rhs(r);
    }
    if (sgn(infeasibility) != 0) return {LPStatus::Infeasible, {}, {}};
    drive_out_artificials();

    if (last_phase == Phase::Optimize) {
      std::vector<mpq_class> cost(total_cols_, 0);
      for (std::size_t j = 0; j < lp_.variable_count(); ++j) {
        cost[map_.pos[j]] = lp_.objective[j].mpq();
        if (map_.neg[j] >= 0) cost[static_cast<std::size_t>(map_.neg[j])] = -lp_.objective[j].mpq();
      }
      if (iterate(cost, /*allow_artificial=*/false) == LPStatus::Unbounded) return {LPStatus::Unbounded, {}, {}};
    }

    LPOutcome out;
    out.status = LPStatus::Optimal;
    std::vector<mpq_class> column_value(total_cols_, 0);
    for (std::size_t r = 0; r < tab_.rows(); ++r) column_value[basis_[r]] = tab_.rhs(r);
    mpq_class value = 0;
    for (std::size_t j = 0; j < lp_.variable_count(); ++j) {
      mpq_class x = map_.offset[j] + column_value[map_.pos[j]];
      if (map_.neg[j] >= 0) x -= column_value[static_cast<std::size_t>(map_.neg[j])];
      value += lp_.objective[j].mpq() * x;
      out.point.emplace_back(x);
    }
    out.value = Rational(value);
    return out;
  }

 private:
  void build() {
    const std::size_t n = lp_.variable_count();
    map_.pos.resize(n);
    map_.neg.assign(n, -1);
    map_.offset.assign(n, 0);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      map_.pos[j] = col++;
      if (!lp_.lower_bounds.empty()) {
        if (lp_.lower_bounds[j].has_value()) {
          map_.offset[j] = lp_.lower_bounds[j]->mpq();
        } else {
          map_.neg[j] = static_cast<std::ptrdiff_t>(col++);
        }
      }
    }
    structural_ = col;

    // Shift by lower bounds and orient every row to a non-negative right-hand side.
    struct Oriented {
      std::vector<mpq_class> a;
      Relation rel;
      mpq_class b;
    };
    std::vector<Oriented> rows;
    rows.reserve(lp_.constraints.size());
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (const auto& c : lp_.constraints) {
      Oriented o{std::vector<mpq_class>(structural_, 0), c.relation, c.rhs.mpq()};
      for (std::size_t j = 0; j < n; ++j) {
        const mpq_class& a = c.coefficients[j].mpq();
        if (sgn(a) == 0) continue;
        o.a[map_.pos[j]] = a;
        if (map_.neg[j] >= 0) o.a[static_cast<std::size_t>(map_.neg[j])] = -a;
        o.b -= a * map_.offset[j];
      }
      if (sgn(o.b) < 0) {
        for (auto& v : o.a) v = -v;
        o.b = -o.b;
        if (o.rel == Relation::LessEqual) {
          o.rel = Relation::GreaterEqual;
        } else if (o.rel == Relation::GreaterEqual) {
          o.rel = Relation::LessEqual;
        }
      }
      if (o.rel != Relation::Equal) ++slack_count;
      if (o.rel != Relation::LessEqual) ++artificial_count;
      rows.push_back(std::move(o));
    }

    artificial_begin_ = structural_ + slack_count;
    total_cols_ = artificial_begin_ + artificial_count;
    tab_ = Tableau(rows.size(), total_cols_);
    basis_.assign(rows.size(), 0);
    std::size_t next_slack = structural_;
    std::size_t next_art = artificial_begin_;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t c = 0; c < structural_; ++c) tab_.at(r, c) = rows[r].a[c];
      tab_.rhs(r) = rows[r].b;
      switch (rows[r].rel) {
        case Relation::LessEqual:
          tab_.at(r, next_slack) = 1;
          basis_[r] = next_slack++;
          break;
        case Relation::GreaterEqual:
          tab_.at(r, next_slack++) = -1;
          tab_.at(r, next_art) = 1;
          basis_[r] = next_art++;
          break;
        case Relation::Equal:
          tab_.at(r, next_art) = 1;
          basis_[r] = next_art++;
          break;
      }
    }
  }

  // Primal simplex from the current basis; Bland's rule for entering and leaving.
  LPStatus iterate(const std::vector<mpq_class>& cost, bool allow_artificial) {
    const std::size_t limit = allow_artificial ? total_cols_ : artificial_begin_;
    std::vector<mpq_class> reduced(limit);
    while (true) {
      std::ptrdiff_t entering = -1;
      for (std::size_t c = 0; c < limit && entering < 0; ++c) {
        reduced[c] = cost[c];
        for (std::size_t r = 0; r < tab_.rows(); ++r) {
          const mpq_class& t = tab_.at(r, c);
          if (sgn(t) != 0 && sgn(cost[basis_[r]]) != 0) reduced[c] -= cost[basis_[r]] * t;
        }
        if (sgn(reduced[c]) > 0) entering = static_cast<std::ptrdiff_t>(c);
      }
      if (entering < 0) return LPStatus::Optimal;
      const auto ec = static_cast<std::size_t>(entering);

      std::ptrdiff_t leaving = -1;
      mpq_class best_ratio;
      for (std::size_t r = 0; r < tab_.rows(); ++r) {
        const mpq_class& t = tab_.at(r, ec);
        if (sgn(t) <= 0) continue;
        mpq_class ratio = tab_.rhs(r) / t;
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[static_cast<std::size_t>(leaving)])) {
          leaving = static_cast<std::ptrdiff_t>(r);
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LPStatus::Unbounded;
      tab_.pivot(static_cast<std::size_t>(leaving), ec);
      basis_[static_cast<std::size_t>(leaving)] = ec;
    }
  }

  void drive_out_artificials() {
    for (std::size_t r = 0; r < tab_.rows();) {
      if (basis_[r] < artificial_begin_) {
        ++r;
        continue;
      }
      std::ptrdiff_t col = -1;
      for (std::size_t c = 0; c < artificial_begin_; ++c) {
        if (sgn(tab_.at(r, c)) != 0) {
          col = static_cast<std::ptrdiff_t>(c);
          break;
        }
      }
      if (col < 0) {
        // Redundant equality: no structural column can replace the artificial.
        tab_.erase_row(r);
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
        continue;
      }
      tab_.pivot(r, static_cast<std::size_t>(col));
      basis_[r] = static_cast<std::size_t>(col);
      ++r;
    }
  }

  const LinearProgram& lp_;
  ColumnMap map_;
  std::size_t structural_ = 0;
  std::size_t artificial_begin_ = 0;
  std::size_t total_cols_ = 0;
  Tableau tab_{0, 0};
  std::vector<std::size_t> basis_;
};

}  // namespace

LPOutcome solve(const LinearProgram& lp) {
  validate(lp);
  return TwoPhaseSolver(lp).run(Phase::Optimize);
}

std::optional<RationalVector> feasibility(const LinearProgram& lp) {
  validate(lp);
  LPOutcome out = TwoPhaseSolver(lp).run(Phase::Feasibility);
  if (out.status != LPStatus::Optimal) return std::nullopt;
  return std::move(out.point);
}

bool satisfies(const LinearProgram& lp, std::span<const Rational> point) {
  validate(lp);
  if (point.size() != lp.variable_count()) throw Error(Errc::DimensionMismatch, "point length differs from variable count");
  for (std::size_t j = 0; j < point.size(); ++j) {
    const bool bounded = lp.lower_bounds.empty() || lp.lower_bounds[j].has_value();
    const Rational lb = lp.lower_bounds.empty() ? Rational(0) : lp.lower_bounds[j].value_or(Rational(0));
    if (bounded && point[j] < lb) return false;
  }
  for (const auto& c : lp.constraints) {
    mpq_class lhs = 0;
    for (std::size_t j = 0; j < point.size(); ++j) lhs += c.coefficients[j].mpq() * point[j].mpq();
    const int s = cmp(lhs, c.rhs.mpq());
    if ((c.relation == Relation::LessEqual && s > 0) || (c.relation == Relation::GreaterEqual && s < 0) ||
        (c.relation == Relation::Equal && s != 0)) {
      return false;
    }
  }
  return true;
}

const char* to_string(LPStatus status) noexcept {
  switch (status) {
    case LPStatus::Optimal: return "optimal";
    case LPStatus::Infeasible: return "infeasible";
    case LPStatus::Unbounded: return "unbounded";
  }
  return "unknown";
}

}  // namespace wvg
