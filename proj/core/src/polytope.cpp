#include "wvg/polytope.hpp"

#include <algorithm>

#include "wvg/error.hpp"

namespace wvg {

namespace {

Rational weight_of(std::span<const Rational> w, const Coalition& s) {
  mpq_class acc = 0;
  for (Coalition::Mask m = s.mask(); m != 0; m &= m - 1) acc += w[static_cast<std::size_t>(std::countr_zero(m))].mpq();
  return Rational(acc);
}

std::vector<std::pair<int, long>> coalition_terms(const Coalition& s, long coefficient) {
  std::vector<std::pair<int, long>> terms;
  for (int p : s.members()) terms.emplace_back(p, coefficient);
  return terms;
}

// Rows shared by the lifted programs over (w_0..w_{n-1}, q, ...):
//   -w_i <= 0,  w(T) - q <= 0 for maximal losing T,  q [+ delta] - w(S) <= 0 for minimal winning S.
std::vector<IntegerRow> lifted_rows(const WeightPolytope& p, int delta_index) {
  const int n = p.n();
  const int q_index = n;
  std::vector<IntegerRow> rows;
  rows.reserve(static_cast<std::size_t>(n) + p.winning_rows().size() + p.losing_rows().size() + 1);
  for (int i = 0; i < n; ++i) rows.push_back({{{i, -1}}, 0});
  for (const auto& t : p.losing_rows()) {
    auto terms = coalition_terms(t, 1);
    terms.emplace_back(q_index, -1);
    rows.push_back({std::move(terms), 0});
  }
  for (const auto& s : p.winning_rows()) {
    auto terms = coalition_terms(s, -1);
    terms.emplace_back(q_index, 1);
    if (delta_index >= 0) terms.emplace_back(delta_index, 1);
    rows.push_back({std::move(terms), 0});
  }
  return rows;
}

IntegerRow simplex_row(int n) {
  IntegerRow r;
  for (int i = 0; i < n; ++i) r.terms.emplace_back(i, 1);
  r.rhs = 1;
  return r;
}

void require_member(const WeightPolytope& p, std::span<const Rational> w) {
  if (!membership(p, w)) throw Error(Errc::NotInPolytope, "weight vector is not in the weight polytope");
}

QuotaInterval interval_of(const WeightPolytope& p, std::span<const Rational> w) {
  QuotaInterval out;
  out.max_losing = Rational(0);
  bool first = true;
  for (const auto& t : p.losing_rows()) {
    Rational x = weight_of(w, t);
    if (first || out.max_losing < x) out.max_losing = x;
    first = false;
  }
  first = true;
  for (const auto& s : p.winning_rows()) {
    Rational x = weight_of(w, s);
    if (first || x < out.min_winning) out.min_winning = x;
    first = false;
  }
  return out;
}

}  // namespace

WeightPolytope::WeightPolytope(SimpleGame game)
    : game_(std::move(game)), winning_(minimal_winning(game_)), losing_(maximal_losing(game_)) {}

std::pair<Coalition, Coalition> WeightPolytope::pair_row(std::size_t k) const {
  if (k >= pair_row_count()) throw Error(Errc::OutOfRange, "pair row index");
  return {winning_[k / losing_.size()], losing_[k % losing_.size()]};
}

LinearProgram WeightPolytope::explicit_program() const {
  const auto n = static_cast<std::size_t>(this->n());
  LinearProgram lp;
  lp.objective.assign(n, Rational(0));
  for (const auto& s : winning_) {
    for (const auto& t : losing_) {
      RationalVector row(n, Rational(0));
      for (int i : s.members()) row[static_cast<std::size_t>(i)] += Rational(1);
      for (int i : t.members()) row[static_cast<std::size_t>(i)] -= Rational(1);
      lp.add(std::move(row), Relation::GreaterEqual, Rational(0));
    }
  }
  lp.add(RationalVector(n, Rational(1)), Relation::Equal, Rational(1));
  return lp;
}

WeightPolytope build_polytope(const SimpleGame& v) { return WeightPolytope(v); }

bool membership(const WeightPolytope& p, std::span<const Rational> w) {
  if (w.size() != static_cast<std::size_t>(p.n())) throw Error(Errc::DimensionMismatch, "weight vector length");
  for (const auto& x : w) {
    if (x.sign() < 0) return false;
  }
  if (sum(w) != Rational(1)) return false;
  const QuotaInterval iv = interval_of(p, w);
  return iv.max_losing <= iv.min_winning;
}

WeightednessResult is_weighted(const SimpleGame& v) {
  const WeightPolytope p(v);
  const int n = p.n();
  const int delta = n + 1;
  auto rows = lifted_rows(p, delta);
  rows.push_back({{{delta, -1}}, 1});  // delta >= -1 keeps the region bounded
  VertexSimplex lp(n + 2, std::move(rows), {simplex_row(n)});

  // Uniform weights, quota at the heaviest maximal losing coalition, margin to match.
  RationalVector start(static_cast<std::size_t>(n + 2), Rational(1, n));
  int heaviest = 0;
  for (const auto& t : p.losing_rows()) heaviest = std::max(heaviest, t.size());
  int lightest = n;
  for (const auto& s : p.winning_rows()) lightest = std::min(lightest, s.size());
  start[static_cast<std::size_t>(n)] = Rational(heaviest, n);
  start[static_cast<std::size_t>(delta)] = Rational(lightest - heaviest, n);
  lp.start_from(start);

  RationalVector objective(static_cast<std::size_t>(n + 2), Rational(0));
  objective[static_cast<std::size_t>(delta)] = Rational(1);
  if (lp.maximize(objective) != LPStatus::Optimal) throw Error(Errc::MalformedProgram, "margin program unbounded");

  WeightednessResult out;
  out.margin = lp.point()[static_cast<std::size_t>(delta)];
  out.weighted = out.margin.sign() > 0;
  out.weights.assign(lp.point().begin(), lp.point().begin() + n);
  return out;
}

QuotaInterval quota_interval(const SimpleGame& v, std::span<const Rational> w) {
  const WeightPolytope p(v);
  require_member(p, w);
  return interval_of(p, w);
}

Completion representable_point(const SimpleGame& v) {
  WeightednessResult r = is_weighted(v);
  if (!r.weighted) throw Error(Errc::NotWeighted, "game admits no weighted representation");
  const QuotaInterval iv = quota_interval(v, r.weights);
  return {std::move(r.weights), iv.midpoint()};
}

Completion perturb_toward(std::span<const Rational> w_from, std::span<const Rational> anchor, const SimpleGame& v,
                          const Rational& budget) {
  if (w_from.size() != static_cast<std::size_t>(v.n()) || anchor.size() != w_from.size()) {
    throw Error(Errc::DimensionMismatch, "perturb_toward vectors must have n entries");
  }
  if (budget.sign() <= 0) throw Error(Errc::BudgetZero, "perturbation budget must be positive");
  const WeightPolytope p(v);
  require_member(p, w_from);
  if (!membership(p, anchor) || interval_of(p, anchor).degenerate()) {
    throw Error(Errc::AnchorNotStrict, "anchor must strictly separate winning from losing coalitions");
  }

  const QuotaInterval own = interval_of(p, w_from);
  if (!own.degenerate()) return {RationalVector(w_from.begin(), w_from.end()), own.midpoint()};

  const Rational distance = l1_distance(anchor, w_from);
  const Rational lambda = min(Rational(1, 2), budget / distance);
  RationalVector moved;
  moved.reserve(w_from.size());
  for (std::size_t i = 0; i < w_from.size(); ++i) {
    moved.push_back((Rational(1) - lambda) * w_from[i] + lambda * anchor[i]);
  }
  // The separation gap min_S w(S) - max_T w(T) is concave, so any lambda > 0
  // against a strict anchor leaves a non-degenerate interval.
  const QuotaInterval iv = interval_of(p, moved);
  if (iv.degenerate()) throw Error(Errc::AnchorNotStrict, "perturbed point is still on the boundary");
  return {std::move(moved), iv.midpoint()};
}

const char* to_string(Norm norm) noexcept { return norm == Norm::L1 ? "l1" : "linf"; }

PolytopeOptimizer::PolytopeOptimizer(const WeightPolytope& p) : n_(p.n()) {
  const WeightednessResult r = is_weighted(p.game());
  if (r.margin.sign() < 0) throw Error(Errc::EmptyPolytope, "the weight polytope is empty");
  simplex_ = std::make_unique<VertexSimplex>(n_ + 1, lifted_rows(p, -1), std::vector<IntegerRow>{simplex_row(n_)});
  RationalVector start = r.weights;
  start.push_back(interval_of(p, r.weights).max_losing);
  simplex_->start_from(start);
}

PolytopeOptimizer::~PolytopeOptimizer() = default;
PolytopeOptimizer::PolytopeOptimizer(PolytopeOptimizer&&) noexcept = default;
PolytopeOptimizer& PolytopeOptimizer::operator=(PolytopeOptimizer&&) noexcept = default;

Rational PolytopeOptimizer::maximize(std::span<const Rational> objective) {
  if (objective.size() != static_cast<std::size_t>(n_)) throw Error(Errc::DimensionMismatch, "objective length");
  RationalVector lifted(objective.begin(), objective.end());
  lifted.emplace_back(0);
  if (simplex_->maximize(lifted) != LPStatus::Optimal) {
    throw Error(Errc::MalformedProgram, "bounded polytope reported unbounded");
  }
  return simplex_->value(lifted);
}

RationalVector PolytopeOptimizer::argmax() const {
  const auto& x = simplex_->point();
  return RationalVector(x.begin(), x.begin() + n_);
}

std::size_t PolytopeOptimizer::pivot_count() const { return simplex_->pivot_count(); }

DiameterCertificate diameter_linf(const SimpleGame& v) { return diameter_linf(WeightPolytope(v)); }

DiameterCertificate diameter_linf(const WeightPolytope& p) {
  PolytopeOptimizer opt(p);
  const int n = p.n();
  DiameterCertificate best{Norm::Linf, Rational(-1), {}, {}};
  RationalVector objective(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i) {
    objective[static_cast<std::size_t>(i)] = Rational(1);
    const Rational upper = opt.maximize(objective);
    RationalVector high = opt.argmax();
    objective[static_cast<std::size_t>(i)] = Rational(-1);
    const Rational lower = -opt.maximize(objective);
    objective[static_cast<std::size_t>(i)] = Rational(0);
    if (best.value < upper - lower) best = {Norm::Linf, upper - lower, std::move(high), opt.argmax()};
  }
  return best;
}

DiameterCertificate diameter_l1(const SimpleGame& v) {
  if (v.n() > kMaxL1Players) {
    throw Error(Errc::TooManyPlayers, "L1 diameter enumerates sign patterns; at most 16 players");
  }
  return diameter_l1(WeightPolytope(v));
}

DiameterCertificate diameter_l1(const WeightPolytope& p) {
  const int n = p.n();
  if (n > kMaxL1Players) {
    throw Error(Errc::TooManyPlayers, "L1 diameter enumerates sign patterns; at most 16 players");
  }
  PolytopeOptimizer opt(p);

  // W(v) is invariant under permuting equivalent players, so max w(S) only
  // depends on how many members of each class S contains. Walk all count
  // vectors in reflected mixed-radix Gray order: each step toggles one player,
  // which keeps the warm-started simplex close to its previous optimum.
  const PlayerClassification cls = classify_players(p.game());
  const std::size_t m = cls.classes.size();
  std::vector<int> radix(m);
  std::vector<std::size_t> stride(m);
  std::size_t states = 1;
  for (std::size_t j = 0; j < m; ++j) {
    radix[j] = static_cast<int>(cls.classes[j].size()) + 1;
    stride[j] = states;
    states *= static_cast<std::size_t>(radix[j]);
  }

  std::vector<Rational> support(states);  // max w(S) for the canonical S of each count vector
  std::vector<int> count(m, 0);
  std::vector<int> step(m, 1);
  RationalVector objective(static_cast<std::size_t>(n), Rational(0));
  std::size_t index = 0;
  support[0] = opt.maximize(objective);
  while (true) {
    std::size_t j = 0;
    while (j < m && (count[j] + step[j] < 0 || count[j] + step[j] >= radix[j])) {
      step[j] = -step[j];
      ++j;
    }
    if (j == m) break;
    if (step[j] > 0) {
      objective[static_cast<std::size_t>(cls.classes[j][static_cast<std::size_t>(count[j])])] = Rational(1);
      ++count[j];
      index += stride[j];
    } else {
      --count[j];
      objective[static_cast<std::size_t>(cls.classes[j][static_cast<std::size_t>(count[j])])] = Rational(0);
      index -= stride[j];
    }
    support[index] = opt.maximize(objective);
  }

  // Width along 1_S: max w(S) - min w(S) = support(c) + support(sizes - c) - 1.
  std::size_t best_index = 0;
  Rational best_width(-1);
  for (std::size_t idx = 0; idx < states; ++idx) {
    std::size_t complement = 0;
    std::size_t rest = idx;
    for (std::size_t j = 0; j < m; ++j) {
      const auto c = rest % static_cast<std::size_t>(radix[j]);
      rest /= static_cast<std::size_t>(radix[j]);
      complement += (static_cast<std::size_t>(radix[j] - 1) - c) * stride[j];
    }
    Rational width = support[idx] + support[complement] - Rational(1);
    if (best_width < width) {
      best_width = std::move(width);
      best_index = idx;
    }
  }

  RationalVector inside(static_cast<std::size_t>(n), Rational(0));
  std::size_t rest = best_index;
  for (std::size_t j = 0; j < m; ++j) {
    const auto c = rest % static_cast<std::size_t>(radix[j]);
    rest /= static_cast<std::size_t>(radix[j]);
    for (std::size_t r = 0; r < c; ++r) inside[static_cast<std::size_t>(cls.classes[j][r])] = Rational(1);
  }
  RationalVector outside(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < outside.size(); ++i) outside[i] = Rational(1) - inside[i];

  DiameterCertificate cert{Norm::L1, best_width * Rational(2), {}, {}};
  opt.maximize(inside);
  cert.witness_a = opt.argmax();
  opt.maximize(outside);
  cert.witness_b = opt.argmax();
  if (l1_distance(cert.witness_a, cert.witness_b) != cert.value) {
    throw Error(Errc::MalformedProgram, "L1 witnesses disagree with the certified width");
  }
  return cert;
}

}  // namespace wvg
