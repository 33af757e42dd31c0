#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/test_common.hpp"
#include "wvg/polytope.hpp"

using namespace wvg;
using testutil::R;
using testutil::throws_errc;
using testutil::V;

namespace {

SimpleGame majority3() { return realize(WeightedRepresentation(R(2), {R(1), R(1), R(1)})); }

SimpleGame unanimity(int n) {
  return realize(WeightedRepresentation(R(n), RationalVector(static_cast<std::size_t>(n), R(1))));
}

SimpleGame from_minimal(int n, std::initializer_list<std::initializer_list<int>> sets) {
  std::vector<Coalition> gens;
  for (auto s : sets) {
    std::vector<int> z;
    for (int p : s) z.push_back(p - 1);
    gens.push_back(Coalition::of(n, z));
  }
  return SimpleGame::from_winning_generators(n, gens);
}

bool is_permutation_of(RationalVector a, RationalVector b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

void expect_valid_certificate(const WeightPolytope& p, const DiameterCertificate& c) {
  EXPECT_TRUE(membership(p, c.witness_a));
  EXPECT_TRUE(membership(p, c.witness_b));
  const Rational d = c.norm == Norm::L1 ? l1_distance(c.witness_a, c.witness_b)
                                        : linf_distance(c.witness_a, c.witness_b);
  EXPECT_EQ(d, c.value);
  EXPECT_LE(c.value, c.norm == Norm::L1 ? R(2) : R(1));
  EXPECT_LE(linf_distance(c.witness_a, c.witness_b) * R(2), l1_distance(c.witness_a, c.witness_b));
}

}  // namespace

TEST(BuildPolytope, RowFamilies) {
  const WeightPolytope maj(majority3());
  EXPECT_EQ(maj.winning_rows().size(), 3U);
  EXPECT_EQ(maj.losing_rows().size(), 3U);
  EXPECT_EQ(maj.pair_row_count(), 9U);

  const WeightPolytope dict(realize(WeightedRepresentation(R(1), {R(1), R(0)})));
  ASSERT_EQ(dict.pair_row_count(), 1U);
  EXPECT_EQ(dict.pair_row(0), std::make_pair(Coalition::of(2, {0}), Coalition::of(2, {1})));

  // v_{1,2,0}: singletons win, only the empty coalition loses.
  const WeightPolytope passers(realize(WeightedRepresentation(R(1), {R(1), R(1)})));
  ASSERT_EQ(passers.losing_rows().size(), 1U);
  EXPECT_TRUE(passers.losing_rows().front().is_empty());
}

TEST(BuildPolytope, ExplicitProgramMatchesWorkedExample) {
  // W([2;1,1,1]) = {w >= 0, sum 1, w_i <= 1/2}: the three permutations of (1/2,1/2,0).
  const WeightPolytope p(majority3());
  LinearProgram lp = p.explicit_program();
  for (int i = 0; i < 3; ++i) {
    RationalVector c(3, R(0));
    c[static_cast<std::size_t>(i)] = R(1);
    lp.objective = c;
    EXPECT_EQ(solve(lp).value, R(1, 2));
    c[static_cast<std::size_t>(i)] = R(-1);
    lp.objective = c;
    EXPECT_EQ(solve(lp).value, R(0));
  }
}

TEST(Membership, Examples) {
  const WeightPolytope p(majority3());
  EXPECT_TRUE(membership(p, V({"1/2", "1/2", "0"})));
  EXPECT_FALSE(membership(p, V({"1", "0", "0"})));
  EXPECT_FALSE(membership(p, V({"1/2", "1/2", "1/2"})));
  EXPECT_TRUE(membership(p, representable_point(p.game()).weights));
  EXPECT_TRUE(throws_errc([&] { (void)membership(p, V({"1/2", "1/2"})); }, Errc::DimensionMismatch));
}

TEST(IsWeighted, Examples) {
  const WeightednessResult maj = is_weighted(majority3());
  EXPECT_TRUE(maj.weighted);
  EXPECT_GT(maj.margin, R(0));

  const WeightednessResult nw = is_weighted(from_minimal(4, {{1, 2}, {3, 4}}));
  EXPECT_FALSE(nw.weighted);

  const WeightednessResult dict = is_weighted(realize(WeightedRepresentation(R(1), {R(1), R(0), R(0)})));
  EXPECT_TRUE(dict.weighted);
  EXPECT_EQ(dict.weights, V({"1", "0", "0"}));
  EXPECT_EQ(dict.margin, R(1));
}

TEST(QuotaInterval, Examples) {
  const QuotaInterval a = quota_interval(majority3(), V({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(a.max_losing, R(1, 3));
  EXPECT_EQ(a.min_winning, R(2, 3));
  EXPECT_FALSE(a.degenerate());

  const QuotaInterval b = quota_interval(majority3(), V({"1/2", "1/2", "0"}));
  EXPECT_TRUE(b.degenerate());
  EXPECT_EQ(b.max_losing, R(1, 2));

  const QuotaInterval c = quota_interval(realize(WeightedRepresentation(R(1), {R(1), R(0)})), V({"1", "0"}));
  EXPECT_EQ(c.max_losing, R(0));
  EXPECT_EQ(c.min_winning, R(1));

  EXPECT_TRUE(throws_errc([] { (void)quota_interval(majority3(), V({"1", "0", "0"})); }, Errc::NotInPolytope));
}

TEST(RepresentablePoint, RoundTrips) {
  for (const SimpleGame& v : {majority3(), realize(WeightedRepresentation(R(2), {R(1), R(1), R(0)})),
                              realize(WeightedRepresentation(R(1), {R(1), R(0), R(0)}))}) {
    const Completion c = representable_point(v);
    EXPECT_EQ(realize(c.representation()), v);
  }
  const Completion d = representable_point(realize(WeightedRepresentation(R(1), {R(1), R(0), R(0)})));
  EXPECT_EQ(d.weights, V({"1", "0", "0"}));
  EXPECT_TRUE(throws_errc([] { (void)representable_point(from_minimal(4, {{1, 2}, {3, 4}})); }, Errc::NotWeighted));
}

TEST(PerturbToward, Examples) {
  const SimpleGame v = majority3();
  const RationalVector from = V({"1/2", "1/2", "0"});
  const RationalVector anchor = V({"1/3", "1/3", "1/3"});
  const Completion c = perturb_toward(from, anchor, v, R(1, 42));
  EXPECT_EQ(l1_distance(from, c.weights), R(1, 42));
  EXPECT_FALSE(quota_interval(v, c.weights).degenerate());
  EXPECT_EQ(realize(c.representation()), v);

  const Completion same = perturb_toward(anchor, anchor, v, R(5));
  EXPECT_EQ(same.weights, anchor);
  EXPECT_EQ(same.quota, R(1, 2));

  const RationalVector interior = V({"2/5", "1/3", "4/15"});
  EXPECT_EQ(perturb_toward(interior, anchor, v, R(1, 100)).weights, interior);

  // Halfway cap when the budget is generous.
  const Completion capped = perturb_toward(from, anchor, v, R(10));
  EXPECT_EQ(capped.weights, V({"5/12", "5/12", "1/6"}));
}

TEST(PerturbToward, Errors) {
  const SimpleGame v = majority3();
  EXPECT_TRUE(throws_errc([&] { (void)perturb_toward(V({"1/2", "1/2", "0"}), V({"1/3", "1/3", "1/3"}), v, R(0)); },
                          Errc::BudgetZero));
  EXPECT_TRUE(throws_errc(
      [&] { (void)perturb_toward(V({"1/2", "1/2", "0"}), V({"1/2", "0", "1/2"}), v, R(1, 10)); },
      Errc::AnchorNotStrict));
  EXPECT_TRUE(throws_errc([&] { (void)perturb_toward(V({"1", "0", "0"}), V({"1/3", "1/3", "1/3"}), v, R(1)); },
                          Errc::NotInPolytope));
}

TEST(Diameter, WorkedExample) {
  const DiameterCertificate l1 = diameter_l1(majority3());
  EXPECT_EQ(l1.value, R(1));
  EXPECT_TRUE(is_permutation_of(l1.witness_a, V({"1/2", "1/2", "0"})));
  EXPECT_TRUE(is_permutation_of(l1.witness_b, V({"1/2", "1/2", "0"})));
  EXPECT_EQ(diameter_linf(majority3()).value, R(1, 2));
  expect_valid_certificate(WeightPolytope(majority3()), l1);
}

TEST(Diameter, UnanimityAndSingletons) {
  for (int n = 2; n <= 6; ++n) {
    EXPECT_EQ(diameter_l1(unanimity(n)).value, R(2));
    EXPECT_EQ(diameter_linf(unanimity(n)).value, R(1));
  }
  const SimpleGame one = unanimity(1);
  EXPECT_EQ(diameter_l1(one).value, R(0));
  EXPECT_EQ(diameter_linf(one).value, R(0));
}

TEST(Diameter, EmptyPolytopeIsReported) {
  const SimpleGame v = from_minimal(5, {{1, 4}, {2, 3, 4}, {2, 3, 5}});
  // All winning/losing pairs written out densely and handed to the tableau solver.
  const oracle::HPolytope h = oracle::weight_polytope(5, oracle::game_wins(v));
  LinearProgram lp;
  lp.objective.assign(5, R(0));
  for (std::size_t i = 0; i < h.a.size(); ++i) lp.add(h.a[i], Relation::LessEqual, h.b[i]);
  lp.add(h.e.front(), Relation::Equal, h.f.front());
  ASSERT_FALSE(feasibility(lp).has_value());
  EXPECT_LT(is_weighted(v).margin, R(0));
  EXPECT_TRUE(throws_errc([&] { (void)diameter_l1(v); }, Errc::EmptyPolytope));
  EXPECT_TRUE(throws_errc([&] { (void)diameter_linf(v); }, Errc::EmptyPolytope));
}

TEST(Diameter, RoughlyWeightedGameHasAPoint) {
  // {1,2} and {3,4} win, {1,3} and {2,4} lose: only the uniform vector survives.
  const SimpleGame v = from_minimal(4, {{1, 2}, {3, 4}});
  EXPECT_EQ(diameter_l1(v).value, R(0));
  EXPECT_EQ(diameter_l1(v).witness_a, V({"1/4", "1/4", "1/4", "1/4"}));
}

TEST(Diameter, TooManyPlayersForSignPatterns) {
  EXPECT_TRUE(throws_errc([] { (void)diameter_l1(unanimity(17)); }, Errc::TooManyPlayers));
}

class PolytopeOracle : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PolytopeOracle, DiametersMatchVertexEnumeration) {
  oracle::Sampler sampler(GetParam());
  for (int iter = 0; iter < 20; ++iter) {
    const WeightedRepresentation rep = sampler.representation(sampler.integer(2, 4));
    const SimpleGame v = realize(rep);
    const int n = v.n();
    const auto verts = oracle::vertices(oracle::weight_polytope(n, oracle::game_wins(v)));
    ASSERT_FALSE(verts.empty());
    const WeightPolytope p(v);
    const DiameterCertificate l1 = diameter_l1(p);
    const DiameterCertificate linf = diameter_linf(p);
    EXPECT_EQ(l1.value, oracle::max_l1(verts));
    EXPECT_EQ(linf.value, oracle::max_linf(verts));
    expect_valid_certificate(p, l1);
    expect_valid_certificate(p, linf);

    // Every sign pattern pair stays below the diameter and one attains it.
    PolytopeOptimizer opt(p);
    bool attained = false;
    for (Coalition::Mask m = 0; m < (Coalition::Mask{1} << n); ++m) {
      RationalVector sigma, minus;
      for (int i = 0; i < n; ++i) {
        sigma.push_back((m >> i) & 1U ? R(1) : R(-1));
        minus.push_back(-sigma.back());
      }
      const Rational f = opt.maximize(sigma) + opt.maximize(minus);
      EXPECT_LE(f, l1.value);
      attained = attained || f == l1.value;
    }
    EXPECT_TRUE(attained);

    // Dual games share the diameter on every sample so far.
    const SimpleGame d = dual(v);
    EXPECT_EQ(diameter_l1(d).value, l1.value);
    EXPECT_EQ(diameter_linf(d).value, linf.value);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PolytopeOracle, ::testing::Values(11, 12, 13));

TEST(Diameter, CertificatesOnLargerRandomGames) {
  oracle::Sampler sampler(77);
  for (int iter = 0; iter < 30; ++iter) {
    const SimpleGame v = realize(sampler.representation(sampler.integer(5, 8)));
    const WeightPolytope p(v);
    const DiameterCertificate l1 = diameter_l1(p);
    const DiameterCertificate linf = diameter_linf(p);
    expect_valid_certificate(p, l1);
    expect_valid_certificate(p, linf);
    EXPECT_LE(linf.value * R(2), l1.value);
  }
}
