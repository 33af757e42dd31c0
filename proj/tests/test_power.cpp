#include <gtest/gtest.h>

#include "support/oracles.hpp"
#include "support/test_common.hpp"
#include "wvg/bounds.hpp"
#include "wvg/constructions.hpp"
#include "wvg/power.hpp"

using namespace wvg;
using testutil::R;
using testutil::throws_errc;
using testutil::V;

namespace {

WeightedRepresentation intro_rep() { return WeightedRepresentation(R(51, 100), V({"35/100", "34/100", "17/100", "14/100"})); }

SimpleGame dictator(int n) {
  return SimpleGame::from_predicate(n, [](Coalition::Mask m) { return (m & 1U) != 0; });
}

PowerVector custom(RationalVector values) {
  PowerVector phi;
  phi.values = std::move(values);
  return phi;
}

}  // namespace

TEST(Shapley, Examples) {
  EXPECT_EQ(shapley_shubik(realize(intro_rep())).values, V({"1/3", "1/3", "1/3", "0"}));
  EXPECT_EQ(shapley_shubik(dictator(3)).values, V({"1", "0", "0"}));
  EXPECT_EQ(shapley_shubik(realize(WeightedRepresentation(R(2), {R(1), R(1)}))).values, V({"1/2", "1/2"}));
  EXPECT_EQ(shapley_shubik(dictator(1)).values, V({"1"}));
}

TEST(Banzhaf, Examples) {
  const auto g = realize(intro_rep());
  EXPECT_EQ(penrose_banzhaf(g, true).values, V({"1/3", "1/3", "1/3", "0"}));
  EXPECT_EQ(penrose_banzhaf(g, false).values, V({"1/2", "1/2", "1/2", "0"}));
  EXPECT_EQ(penrose_banzhaf(dictator(2), false).values, V({"1", "0"}));
  const auto maj = realize(WeightedRepresentation(R(2), {R(1), R(1), R(1)}));
  EXPECT_EQ(penrose_banzhaf(maj, false).values, V({"1/2", "1/2", "1/2"}));
  EXPECT_EQ(power_index(maj, PowerIndex::BanzhafRaw).index, PowerIndex::BanzhafRaw);
  EXPECT_STREQ(to_string(PowerIndex::Banzhaf), "pbi");
}

class PowerOracle : public ::testing::TestWithParam<int> {};

TEST_P(PowerOracle, MatchesBruteForce) {
  oracle::Sampler rng(static_cast<std::uint64_t>(GetParam()));
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.integer(1, 6);
    const auto rep = rng.representation(n);
    const auto v = realize(rep);
    const auto wins = oracle::game_wins(v);

    const auto ssi = shapley_shubik(v);
    ASSERT_EQ(ssi.values, oracle::ssi_by_permutations(n, wins));
    ASSERT_TRUE(ssi.efficient());

    const auto swings = oracle::swing_counts(n, wins);
    const auto raw = penrose_banzhaf(v, false);
    const auto pbi = penrose_banzhaf(v, true);
    std::uint64_t total = 0;
    for (auto c : swings) total += c;
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      ASSERT_EQ(raw.values[ui], Rational(static_cast<long>(swings[ui]), 1L << (n - 1)));
      ASSERT_EQ(pbi.values[ui], Rational(static_cast<long>(swings[ui]), static_cast<long>(total)));
    }
    ASSERT_TRUE(pbi.efficient());

    const auto cls = classify_players(v);
    for (int i = 0; i < n; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      if (cls.roles[ui] == PlayerRole::Null) {
        ASSERT_EQ(ssi.values[ui], R(0));
        ASSERT_EQ(pbi.values[ui], R(0));
      }
      for (int j : cls.classes[static_cast<std::size_t>(cls.class_of(i))]) {
        ASSERT_EQ(ssi.values[ui], ssi.values[static_cast<std::size_t>(j)]);
        ASSERT_EQ(pbi.values[ui], pbi.values[static_cast<std::size_t>(j)]);
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, PowerOracle, ::testing::Values(3, 14, 15, 92));

TEST(Compatibility, Examples) {
  const auto g = realize(intro_rep());
  const auto c = representation_compatible(g, shapley_shubik(g));
  EXPECT_TRUE(c.compatible);
  EXPECT_EQ(c.max_losing, R(1, 3));
  EXPECT_EQ(c.min_winning, R(2, 3));
  EXPECT_EQ(c.quota, R(1, 2));

  const auto h = realize(WeightedRepresentation(R(3), {R(2), R(1), R(1)}));
  const auto d = representation_compatible(h, custom(V({"0", "1/2", "1/2"})));
  EXPECT_FALSE(d.compatible);
  ASSERT_TRUE(d.violation.has_value());
  const auto& [losing, winning] = *d.violation;
  EXPECT_FALSE(h.wins(losing));
  EXPECT_TRUE(h.wins(winning));
  const auto phi_of = [](const Coalition& s, const RationalVector& x) {
    Rational t;
    for (int i = 0; i < static_cast<int>(x.size()); ++i) {
      if (s.contains(i)) t += x[static_cast<std::size_t>(i)];
    }
    return t;
  };
  EXPECT_GE(phi_of(losing, V({"0", "1/2", "1/2"})), phi_of(winning, V({"0", "1/2", "1/2"})));

  const auto un = realize(WeightedRepresentation(R(4), {R(1), R(1), R(1), R(1)}));
  const auto e = representation_compatible(un, custom(V({"1/4", "1/4", "1/4", "1/4"})));
  EXPECT_TRUE(e.compatible);
  EXPECT_EQ(e.quota, R(7, 8));

  EXPECT_TRUE(throws_errc([&] { representation_compatible(h, custom(V({"1/2", "1/4", "0"}))); },
                          Errc::NotEfficient));
}

TEST(DistanceReport, Examples) {
  const auto g = realize(intro_rep());
  const auto r = distance_report(intro_rep(), shapley_shubik(g));
  EXPECT_EQ(r.l1, R(49, 150));
  EXPECT_EQ(r.linf, R(49, 300));
  ASSERT_TRUE(r.bound.has_value());
  EXPECT_TRUE(r.within_bound);

  const WeightedRepresentation self(R(1, 2), V({"1/3", "1/3", "1/3"}));
  EXPECT_EQ(distance_report(self, shapley_shubik(realize(self))).l1, R(0));

  RationalVector fifteen;
  for (int i = 15; i >= 1; --i) fifteen.push_back(R(i, 120));
  const WeightedRepresentation worked(R(3, 5), fifteen);
  const auto phi = shapley_shubik(realize(worked));
  const auto w = distance_report(worked, phi);
  if (w.bound) {
    EXPECT_EQ(*w.bound, R(5, 4));
    EXPECT_LE(w.l1, R(5, 4));
  }

  EXPECT_TRUE(throws_errc([&] { distance_report(WeightedRepresentation(R(1), V({"1/2", "1/2"})), custom(V({"1/2", "1/2"}))); },
                          Errc::OutOfRange));
  EXPECT_TRUE(throws_errc([&] { distance_report(self, custom(V({"1/2", "1/2"}))); }, Errc::DimensionMismatch));
}

TEST(DistanceReport, EnvelopeOnSampledGames) {
  oracle::Sampler rng(51);
  int compatible = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const auto rep = rng.representation(rng.integer(2, 7));
    const auto v = realize(rep);
    for (auto index : {PowerIndex::ShapleyShubik, PowerIndex::Banzhaf}) {
      const auto phi = power_index(v, index);
      const auto r = distance_report(rep, phi);
      ASSERT_EQ(r.bound.has_value(), representation_compatible(v, phi).compatible);
      if (!r.bound) continue;
      ++compatible;
      const Rational q = rep.quota();
      ASSERT_EQ(*r.bound, R(4) * max_weight(rep.weights()) / (q < R(1) - q ? q : R(1) - q));
      ASSERT_LE(r.l1, *r.bound) << "trial " << trial;
      ASSERT_TRUE(r.within_bound);
    }
  }
  EXPECT_GT(compatible, 50);
}

TEST(PairBound, Examples) {
  const auto c = lemma33_witness(R(3, 4), 4);
  const WeightedRepresentation a(*c.quota_a, c.w_a), b(*c.quota_b, c.w_b);
  for (auto index : {PowerIndex::ShapleyShubik, PowerIndex::Banzhaf}) {
    const auto phi = power_index(c.game, index);
    const auto l1 = pair_lower_bound(a, b, phi, Norm::L1);
    EXPECT_TRUE(l1.holds);
    EXPECT_GE(l1.bound, R(1, 3));
    EXPECT_GE(l1.distance, R(1, 3));
    EXPECT_GE(pair_lower_bound(a, b, phi, Norm::Linf).bound, R(1, 6));
  }

  const auto same = pair_lower_bound(a, a, shapley_shubik(c.game), Norm::L1);
  EXPECT_EQ(same.bound, R(0));
  EXPECT_TRUE(same.holds);

  const auto d = lemma35_witness(R(3, 4), 4);
  const WeightedRepresentation da(*d.quota_a, d.w_a), db(*d.quota_b, d.w_b);
  const auto linf = pair_lower_bound(da, db, shapley_shubik(d.game), Norm::Linf);
  EXPECT_GE(linf.bound, R(3, 16));
  EXPECT_TRUE(linf.holds);

  const WeightedRepresentation other(R(1, 2), V({"1/4", "1/4", "1/4", "1/4"}));
  EXPECT_TRUE(throws_errc([&] { pair_lower_bound(a, other, shapley_shubik(c.game), Norm::L1); }, Errc::GamesDiffer));
}

TEST(PowerLowerBound, Examples) {
  const auto r = prop54_harness(R(1, 2), R(1, 4), 6, PowerIndex::ShapleyShubik);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lambda, R(1, 40));
  EXPECT_EQ(r.certified, R(1, 100));
  EXPECT_GE(r.final_distance, R(1, 100));
  EXPECT_EQ(r.final_distance, l1_distance(r.w_bar, r.phi.values));
  EXPECT_GE(r.pair_distance, r.lambda);
  EXPECT_EQ(oracle::weighted_wins(r.w_bar, r.quota_bar), oracle::game_wins(make_vkst(r.k, r.s, r.t).game));

  const auto p = prop54_harness(R(1, 2), R(1, 2), 4, PowerIndex::Banzhaf);
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.s, 2);
  EXPECT_TRUE(p.k == 1 || p.k == 2);
  EXPECT_EQ(p.t, 2);

  const auto edge = prop54_harness(R(1, 3), R(1, 3), 5, PowerIndex::ShapleyShubik);
  EXPECT_TRUE(edge.holds);

  EXPECT_TRUE(throws_errc([] { prop54_harness(R(0), R(1, 4), 6, PowerIndex::ShapleyShubik); }, Errc::OutOfRange));
}
