#include <algorithm>
#include <cmath>
#include <limits>

#include "wvg/error.hpp"
#include "wvg/lp.hpp"

namespace wvg {

namespace {

mpq_class row_dot(const std::vector<std::pair<int, long>>& terms, std::span<const mpq_class> v) {
  mpq_class acc = 0;
  for (const auto& [j, a] : terms) acc += v[static_cast<std::size_t>(j)] * a;
  return acc;
}

// Reduced row echelon form of a small dense system, used to find a
// direction orthogonal to every row collected so far.
class Echelon {
 public:
  explicit Echelon(int dim) : dim_(dim) {}

  int rank() const noexcept { return static_cast<int>(rows_.size()); }

  // Adds the row if it is independent of the current rows; returns whether it was.
  bool add(std::vector<mpq_class> row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const mpq_class f = row[pivots_[k]];
      if (sgn(f) == 0) continue;
      for (int c = 0; c < dim_; ++c) row[c] -= f * rows_[k][c];
    }
    int p = -1;
    for (int c = 0; c < dim_; ++c) {
      if (sgn(row[c]) != 0) {
        p = c;
        break;
      }
    }
    if (p < 0) return false;
    const mpq_class inv = 1 / row[p];
    for (auto& v : row) v *= inv;
    for (auto& r : rows_) {
      const mpq_class f = r[p];
      if (sgn(f) == 0) continue;
      for (int c = 0; c < dim_; ++c) r[c] -= f * row[c];
    }
    rows_.push_back(std::move(row));
    pivots_.push_back(p);
    return true;
  }

  // Nonzero vector z with row . z = 0 for every stored row. Requires rank < dim.
  std::vector<mpq_class> null_vector() const {
    std::vector<char> is_pivot(static_cast<std::size_t>(dim_), 0);
    for (int p : pivots_) is_pivot[static_cast<std::size_t>(p)] = 1;
    int free_col = 0;
    while (is_pivot[static_cast<std::size_t>(free_col)]) ++free_col;
    std::vector<mpq_class> z(static_cast<std::size_t>(dim_), 0);
    z[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) z[static_cast<std::size_t>(pivots_[k])] = -rows_[k][free_col];
    return z;
  }

 private:
  int dim_;
  std::vector<std::vector<mpq_class>> rows_;
  std::vector<int> pivots_;
};

}  // namespace

VertexSimplex::VertexSimplex(int dimension, std::vector<IntegerRow> inequalities, std::vector<IntegerRow> equalities)
    : dim_(dimension), equality_count_(equalities.size()) {
  if (dimension <= 0) throw Error(Errc::MalformedProgram, "dimension must be positive");
  rows_.reserve(equalities.size() + inequalities.size());
  for (auto* group : {&equalities, &inequalities}) {
    for (auto& r : *group) {
      for (const auto& [j, a] : r.terms) {
        if (j < 0 || j >= dimension) throw Error(Errc::MalformedProgram, "row references a missing variable");
      }
      rows_.push_back({std::move(r.terms), mpz_class(r.rhs)});
    }
  }
  in_basis_.assign(rows_.size(), 0);
  row_start_.reserve(rows_.size() + 1);
  row_start_.push_back(0);
  for (const auto& r : rows_) {
    for (const auto& [j, a] : r.terms) {
      col_f_.push_back(j);
      coef_f_.push_back(static_cast<double>(a));
    }
    row_start_.push_back(col_f_.size());
    rhs_f_.push_back(r.rhs.get_d());
  }
}

void VertexSimplex::start_from(std::span<const Rational> feasible_point) {
  if (feasible_point.size() != static_cast<std::size_t>(dim_)) {
    throw Error(Errc::DimensionMismatch, "start point has wrong dimension");
  }
  std::vector<mpq_class> x(feasible_point.size());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = feasible_point[i].mpq();

  auto slack = [&](std::size_t r) { return mpq_class(rows_[r].rhs - row_dot(rows_[r].terms, x)); };
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const int s = sgn(slack(r));
    if ((r < equality_count_ && s != 0) || s < 0) {
      throw Error(Errc::PreconditionViolated, "start point violates row " + std::to_string(r));
    }
  }

  Echelon ech(dim_);
  basis_.clear();
  std::fill(in_basis_.begin(), in_basis_.end(), 0);
  auto dense = [&](std::size_t r) {
    std::vector<mpq_class> v(static_cast<std::size_t>(dim_), 0);
    for (const auto& [j, a] : rows_[r].terms) v[static_cast<std::size_t>(j)] += a;
    return v;
  };
  auto try_add = [&](std::size_t r) {
    if (ech.rank() < dim_ && ech.add(dense(r))) {
      basis_.push_back(static_cast<int>(r));
      in_basis_[r] = 1;
    }
  };
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r < equality_count_ || sgn(slack(r)) == 0) try_add(r);
  }

  // Crossover: walk along null-space directions until d independent rows are tight.
  while (ech.rank() < dim_) {
    const std::vector<mpq_class> z = ech.null_vector();
    std::ptrdiff_t block = -1;
    mpq_class step;
    for (int sign : {1, -1}) {
      for (std::size_t r = equality_count_; r < rows_.size(); ++r) {
        if (in_basis_[r]) continue;
        const mpq_class az = row_dot(rows_[r].terms, z) * sign;
        if (sgn(az) <= 0) continue;
        mpq_class ratio = slack(r) / az;
        if (block < 0 || ratio < step) {
          block = static_cast<std::ptrdiff_t>(r);
          step = ratio;
        }
      }
      if (block >= 0) {
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += step * z[i] * sign;
        break;
      }
    }
    if (block < 0) throw Error(Errc::PreconditionViolated, "feasible region contains a line");
    for (std::size_t r = equality_count_; r < rows_.size(); ++r) {
      if (!in_basis_[r] && sgn(slack(r)) == 0) try_add(r);
    }
  }

  x_.clear();
  for (auto& v : x) x_.emplace_back(v);
  recompute_inverse();
  started_ = true;
}

void VertexSimplex::recompute_inverse() {
  const auto d = static_cast<std::size_t>(dim_);
  // Gauss-Jordan on [B | I], tracking the determinant.
  std::vector<mpq_class> m(d * 2 * d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    for (const auto& [j, a] : rows_[static_cast<std::size_t>(basis_[k])].terms) m[k * 2 * d + static_cast<std::size_t>(j)] += a;
    m[k * 2 * d + d + k] = 1;
  }
  mpq_class det = 1;
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && sgn(m[piv * 2 * d + col]) == 0) ++piv;
    if (piv == d) throw Error(Errc::MalformedProgram, "basis is singular");
    if (piv != col) {
      for (std::size_t c = 0; c < 2 * d; ++c) std::swap(m[piv * 2 * d + c], m[col * 2 * d + c]);
      det = -det;
    }
    det *= m[col * 2 * d + col];
    const mpq_class inv = 1 / m[col * 2 * d + col];
    for (std::size_t c = 0; c < 2 * d; ++c) m[col * 2 * d + c] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      const mpq_class f = m[r * 2 * d + col];
      if (sgn(f) == 0) continue;
      for (std::size_t c = 0; c < 2 * d; ++c) m[r * 2 * d + c] -= f * m[col * 2 * d + c];
    }
  }
  // The right half is B^-1: B x = b gives x = B^-1 b, so rows are variables
  // and columns are basis positions. det B^-1 is integral for integer B.
  det_ = det.get_num();
  adjugate_.assign(d * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const mpq_class v = m[i * 2 * d + d + k] * det;
      adjugate_[i * d + k] = v.get_num();
    }
  }
  recompute_point();
}

void VertexSimplex::recompute_point() {
  const auto d = static_cast<std::size_t>(dim_);
  const int s = sgn(det_);
  scaled_x_.assign(d, 0);
  for (std::size_t k = 0; k < d; ++k) {
    const mpz_class& b = rows_[static_cast<std::size_t>(basis_[k])].rhs;
    if (sgn(b) == 0) continue;
    for (std::size_t i = 0; i < d; ++i) scaled_x_[i] += adjugate_[i * d + k] * b;
  }
  if (s < 0) {
    for (auto& v : scaled_x_) v = -v;
  }
}

// Finds the blocking row for the direction -B^-1 e_kpos: the smallest ratio
// slack_r / (a_r . dir) over rows with a_r . dir > 0, ties to the smallest
// row index. A floating-point pass with rigorous error margins discards rows
// that cannot attain the minimum; the survivors are compared exactly.
std::ptrdiff_t VertexSimplex::ratio_test(std::size_t kpos, mpz_class& best_slack, mpz_class& best_ad) {
  const auto d = static_cast<std::size_t>(dim_);
  const int s = sgn(det_);
  const mpz_class det_abs = abs(det_);
  std::vector<mpz_class> dir(d);
  std::vector<double> dir_f(d);
  std::vector<double> x_f(d);
  const double det_f = det_abs.get_d();
  bool finite = std::isfinite(det_f) && det_f > 0;
  for (std::size_t i = 0; i < d; ++i) {
    dir[i] = adjugate_[i * d + kpos];
    if (s > 0) dir[i] = -dir[i];
    dir_f[i] = dir[i].get_d();
    x_f[i] = scaled_x_[i].get_d() / det_f;
    finite = finite && std::isfinite(dir_f[i]) && std::isfinite(x_f[i]);
  }

  constexpr double kRel = 1e-9;
  constexpr double kTiny = 1e-300;
  constexpr double kExactBound = 9007199254740992.0;
  struct Candidate {
    std::size_t row;
    double low;
  };
  std::vector<Candidate> candidates;
  double upper = std::numeric_limits<double>::infinity();
  mpz_class acc;

  auto exact_ad = [&](std::size_t r, mpz_class& out) {
    out = 0;
    for (const auto& [j, a] : rows_[r].terms) {
      const auto& v = dir[static_cast<std::size_t>(j)];
      if (a >= 0) {
        mpz_addmul_ui(out.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(a));
      } else {
        mpz_submul_ui(out.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-a));
      }
    }
  };

  for (std::size_t r = equality_count_; r < rows_.size(); ++r) {
    if (in_basis_[r]) continue;
    if (!finite) {
      candidates.push_back({r, 0.0});
      continue;
    }
    const std::size_t begin = row_start_[r];
    const std::size_t end = row_start_[r + 1];
    double ad = 0;
    double ad_mag = 0;
    for (std::size_t e = begin; e < end; ++e) {
      const double t = coef_f_[e] * dir_f[static_cast<std::size_t>(col_f_[e])];
      ad += t;
      ad_mag += std::fabs(t);
    }
    // Integer data below 2^53 makes the floating-point dot product exact.
    const double ad_err = ad_mag < kExactBound ? 0.0 : kRel * ad_mag + kTiny;
    if (ad + ad_err <= 0) continue;
    if (ad - ad_err <= 0) {
      exact_ad(r, acc);
      if (sgn(acc) > 0) candidates.push_back({r, 0.0});
      continue;
    }
    double sl = rhs_f_[r];
    double sl_mag = std::fabs(sl);
    for (std::size_t e = begin; e < end; ++e) {
      const double u = coef_f_[e] * x_f[static_cast<std::size_t>(col_f_[e])];
      sl -= u;
      sl_mag += std::fabs(u);
    }
    const double sl_err = kRel * sl_mag + kTiny;
    const double low = std::max(0.0, sl - sl_err) / (ad + ad_err) * (1 - kRel);
    if (low > upper) continue;
    const double high = (sl + sl_err) / (ad - ad_err) * (1 + kRel);
    upper = std::min(upper, high);
    candidates.push_back({r, low});
  }

  std::ptrdiff_t enter = -1;
  mpz_class slack;
  for (const auto& c : candidates) {
    if (c.low > upper) continue;
    exact_ad(c.row, acc);
    if (sgn(acc) <= 0) continue;
    slack = rows_[c.row].rhs * det_abs;
    for (const auto& [j, a] : rows_[c.row].terms) {
      const auto& v = scaled_x_[static_cast<std::size_t>(j)];
      if (a >= 0) {
        mpz_submul_ui(slack.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(a));
      } else {
        mpz_addmul_ui(slack.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-a));
      }
    }
    if (enter < 0 || slack * best_ad < best_slack * acc) {
      enter = static_cast<std::ptrdiff_t>(c.row);
      best_slack = slack;
      best_ad = acc;
      if (sgn(best_slack) == 0) break;
    }
  }
  return enter;
}

LPStatus VertexSimplex::maximize(std::span<const Rational> objective) {
  if (!started_) throw Error(Errc::PreconditionViolated, "maximize called before start_from");
  if (objective.size() != static_cast<std::size_t>(dim_)) throw Error(Errc::DimensionMismatch, "objective length");
  const auto d = static_cast<std::size_t>(dim_);

  // Integer objective with the same direction.
  mpz_class scale = 1;
  for (const auto& c : objective) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.mpq().get_den_mpz_t());
  std::vector<std::pair<std::size_t, mpz_class>> cost;
  for (std::size_t i = 0; i < d; ++i) {
    if (!objective[i].is_zero()) cost.emplace_back(i, objective[i].mpq().get_num() * (scale / objective[i].mpq().get_den()));
  }

  std::vector<mpz_class> ar(d);
  mpz_class y;
  mpz_class best_slack;
  mpz_class best_ad;
  std::size_t degenerate_run = 0;

  while (true) {
    const bool bland = degenerate_run >= d;
    // Multipliers y = c^T B^-1, here scaled by |det|. Outside a degenerate run
    // take the steepest edge, the largest -y_k / |B^-1 e_k|; inside it, the
    // smallest row index with y < 0.
    const int ds = sgn(det_);
    std::ptrdiff_t leave_pos = -1;
    double steepest = 0;
    for (std::size_t k = 0; k < d; ++k) {
      if (static_cast<std::size_t>(basis_[k]) < equality_count_) continue;
      if (bland && leave_pos >= 0 && basis_[k] > basis_[static_cast<std::size_t>(leave_pos)]) continue;
      y = 0;
      for (const auto& [i, c] : cost) y += c * adjugate_[i * d + k];
      if (ds < 0) y = -y;
      if (sgn(y) >= 0) continue;
      if (bland) {
        leave_pos = static_cast<std::ptrdiff_t>(k);
        continue;
      }
      double norm = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const double v = adjugate_[i * d + k].get_d();
        norm += v * v;
      }
      const double rate = -y.get_d() / std::sqrt(norm);
      if (leave_pos < 0 || rate > steepest) {
        steepest = rate;
        leave_pos = static_cast<std::ptrdiff_t>(k);
      }
    }
    if (leave_pos < 0) break;
    const auto kpos = static_cast<std::size_t>(leave_pos);

    const std::ptrdiff_t enter = ratio_test(kpos, best_slack, best_ad);
    if (enter < 0) return LPStatus::Unbounded;
    const auto er = static_cast<std::size_t>(enter);
    degenerate_run = sgn(best_slack) == 0 ? degenerate_run + 1 : 0;

    // Fraction-free replacement of basis position kpos by row er.
    for (std::size_t k = 0; k < d; ++k) {
      ar[k] = 0;
      for (const auto& [j, a] : rows_[er].terms) {
        const auto& v = adjugate_[static_cast<std::size_t>(j) * d + k];
        if (a >= 0) {
          mpz_addmul_ui(ar[k].get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(a));
        } else {
          mpz_submul_ui(ar[k].get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(-a));
        }
      }
    }
    const mpz_class pivot = ar[kpos];
    for (std::size_t k = 0; k < d; ++k) {
      if (k == kpos) continue;
      for (std::size_t i = 0; i < d; ++i) {
        mpz_class& m = adjugate_[i * d + k];
        m *= pivot;
        if (sgn(ar[k]) != 0) m -= ar[k] * adjugate_[i * d + kpos];
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), det_.get_mpz_t());
      }
    }
    det_ = pivot;
    in_basis_[static_cast<std::size_t>(basis_[kpos])] = 0;
    basis_[kpos] = static_cast<int>(er);
    in_basis_[er] = 1;
    ++pivots_;
    recompute_point();
  }

  recompute_point();
  const mpz_class det_abs = abs(det_);
  for (std::size_t i = 0; i < d; ++i) x_[i] = Rational(scaled_x_[i], det_abs);
  return LPStatus::Optimal;
}

Rational VertexSimplex::value(std::span<const Rational> objective) const {
  mpq_class acc = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) acc += objective[i].mpq() * x_[i].mpq();
  return Rational(acc);
}

}  // namespace wvg
