#include "wvg/cli/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "wvg/bounds.hpp"
#include "wvg/cli/sampling.hpp"
#include "wvg/constructions.hpp"
#include "wvg/error.hpp"
#include "wvg/lp.hpp"
#include "wvg/power.hpp"

namespace wvg::cli {

namespace {

using nlohmann::json;

json strings(const RationalVector& v) { return to_strings(v); }

json rep_json(const WeightedRepresentation& rep) {
  return {{"quota", rep.quota().str()}, {"weights", strings(rep.weights())}};
}

class Recorder {
 public:
  explicit Recorder(std::string suite) { result_.suite = std::move(suite); }

  // Counts one exact check; the first failure keeps its instance.
  void check(bool ok, const std::function<json()>& describe) {
    ++result_.checks;
    if (ok) return;
    if (result_.violations++ == 0) result_.counterexample = describe().dump(2);
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

SuiteResult run_lemma22(std::size_t samples, Rng& rng) {
  Recorder rec("lemma22");
  for (std::size_t i = 0; i < samples; ++i) {
    const int n = uniform_int(rng, 2, 10);
    const RationalVector a = random_normalized(rng, n);
    const RationalVector b = random_normalized(rng, n);
    const Rational l1 = l1_distance(a, b);
    const Rational linf = linf_distance(a, b);
    rec.check(linf * Rational(2) <= l1, [&] {
      return json{{"a", strings(a)}, {"b", strings(b)}, {"l1", l1.str()}, {"linf", linf.str()}};
    });
  }
  return rec.take();
}

SuiteResult run_lemma23(std::size_t samples, Rng& rng) {
  Recorder rec("lemma23");
  auto check_chain = [&](const RationalVector& w) {
    const LaaksoBounds b = laakso_bounds(w);
    rec.check(b.chain_holds(), [&] {
      return json{{"w", strings(w)},
                  {"chain", {b.lower_loose.str(), b.lower.str(), b.value.str(), b.upper.str(), b.upper_loose.str()}}};
    });
  };
  for (std::size_t i = 0; i < samples; ++i) check_chain(random_normalized(rng, uniform_int(rng, 2, 10)));
  // Uniform vectors and two-weight vectors meet the bounds with equality.
  for (int n = 2; n <= 10; ++n) {
    const RationalVector uniform(static_cast<std::size_t>(n), Rational(1, n));
    const LaaksoBounds b = laakso_bounds(uniform);
    rec.check(b.lower_loose == Rational(n) && b.upper_loose == Rational(n * n) &&
                  b.lower == b.value && b.value == b.upper,
              [&] { return json{{"w", strings(uniform)}, {"value", b.value.str()}}; });
  }
  for (int p = 1; p < 10; ++p) {
    const RationalVector two{Rational(10 - p, 10), Rational(p, 10)};
    const LaaksoBounds b = laakso_bounds(two);
    const bool tight = b.lower == b.value && b.value == b.upper;
    rec.check(tight, [&] { return json{{"w", strings(two)}, {"lower", b.lower.str()}, {"value", b.value.str()}}; });
  }
  return rec.take();
}

// Random primary games with secondary representations drawn from the weight polytope.
template <class Visit>
void sample_games(std::size_t games, std::size_t secondaries, Rng& rng, Visit&& visit) {
  for (std::size_t g = 0; g < games; ++g) {
    const WeightedRepresentation rep = random_representation(rng, uniform_int(rng, 2, 6));
    const SimpleGame v = realize(rep);
    const WeightPolytope p(v);
    PolytopeOptimizer optimizer(p);
    const Completion anchor = representable_point(v);
    std::vector<WeightedRepresentation> others;
    for (std::size_t j = 0; j < secondaries; ++j) others.push_back(random_secondary(rng, optimizer, v, anchor));
    visit(rep, v, p, others);
  }
}

SuiteResult run_thm43(std::size_t samples, Rng& rng) {
  Recorder rec("thm43");
  sample_games(samples, 20, rng, [&](const WeightedRepresentation& rep, const SimpleGame&, const WeightPolytope& p,
                                     const std::vector<WeightedRepresentation>& others) {
    const DiameterCertificate diam = diameter_l1(p);
    auto side_ok = [&](const WeightedRepresentation& r, const Rational& d) {
      const Envelope env = thm43_envelope(r.quota(), max_weight(r.weights()));
      return d <= env.basic && (!env.refined || d <= *env.refined);
    };
    auto loose = [](const WeightedRepresentation& r) {
      return Rational(4) * max_weight(r.weights()) / min(r.quota(), Rational(1) - r.quota());
    };
    rec.check(diam.value <= loose(rep),
              [&] { return json{{"rep", rep_json(rep)}, {"diameter", diam.value.str()}}; });
    for (const auto& other : others) {
      const Rational d = l1_distance(rep.weights(), other.weights());
      rec.check(side_ok(rep, d) && side_ok(other, d) && diam.value <= loose(other), [&] {
        return json{{"rep", rep_json(rep)}, {"other", rep_json(other)}, {"distance", d.str()},
                    {"diameter", diam.value.str()}};
      });
    }
  });
  return rec.take();
}

// Random x >= 0 with sum one and x(S) >= q on minimal winning S (or x(T) <= q
// on maximal losing T), mixed with w so that interior points occur too.
RationalVector constrained_point(Rng& rng, const WeightedRepresentation& rep, const SimpleGame& v, Side side) {
  const int n = rep.n();
  LinearProgram lp;
  for (int i = 0; i < n; ++i) lp.objective.emplace_back(uniform_int(rng, -5, 5));
  lp.add(RationalVector(static_cast<std::size_t>(n), Rational(1)), Relation::Equal, Rational(1));
  const auto family = side == Side::Winning ? minimal_winning(v) : maximal_losing(v);
  for (const Coalition& c : family) {
    RationalVector row(static_cast<std::size_t>(n), Rational(0));
    for (int i : c.members()) row[static_cast<std::size_t>(i)] = Rational(1);
    lp.add(std::move(row), side == Side::Winning ? Relation::GreaterEqual : Relation::LessEqual, rep.quota());
  }
  const LPOutcome out = solve(lp);
  if (out.status != LPStatus::Optimal) throw Error(Errc::PreconditionViolated, "side-constrained program has no optimum");
  const Rational lambda(uniform_int(rng, 0, 4), 4);
  RationalVector x;
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    x.push_back(lambda * out.point[k] + (Rational(1) - lambda) * rep.weights()[k]);
  }
  return x;
}

SuiteResult run_side(std::string name, Side side, std::size_t samples, Rng& rng) {
  Recorder rec(std::move(name));
  for (std::size_t g = 0; g < samples; ++g) {
    const WeightedRepresentation rep = random_representation(rng, uniform_int(rng, 2, 6));
    const SimpleGame v = realize(rep);
    for (int j = 0; j < 5; ++j) {
      const RationalVector x = constrained_point(rng, rep, v, side);
      const ConstrainedDistance r = check_constrained_distance(rep, x, side);
      rec.check(r.holds, [&] {
        return json{{"rep", rep_json(rep)}, {"x", strings(x)}, {"distance", r.distance.str()}, {"bound", r.bound.str()}};
      });
    }
  }
  return rec.take();
}

json witness_json(const ConstructionWitness& w) {
  return {{"construction", w.construction}, {"w_a", strings(w.w_a)}, {"w_b", strings(w.w_b)},
          {"l1", w.l1_distance.str()}, {"linf", w.linf_distance.str()}};
}

int ceil_of(const Rational& x) {
  const int f = static_cast<int>(x.floor().get_si());
  return Rational(f) == x ? f : f + 1;
}

struct Cell {
  Rational q;
  Rational delta;
  int n;
};

std::vector<Cell> lemma36_cells() {
  const std::vector<std::pair<Rational, Rational>> qd = {
      {Rational(1, 2), Rational(1, 4)},  {Rational(9, 10), Rational(1, 10)}, {Rational(3, 5), Rational(1, 5)},
      {Rational(1, 3), Rational(1, 3)},  {Rational(1, 10), Rational(1, 10)}, {Rational(2, 3), Rational(1, 6)},
      {Rational(1, 4), Rational(1, 8)},  {Rational(3, 4), Rational(3, 10)},  {Rational(2, 5), Rational(2, 7)},
      {Rational(1, 2), Rational(1, 2)},  {Rational(1, 5), Rational(1)},      {Rational(4, 5), Rational(1)},
      {Rational(1, 2), Rational(2, 3)},  {Rational(7, 10), Rational(1, 10)}, {Rational(1, 20), Rational(1, 12)},
      {Rational(19, 20), Rational(1, 12)}, {Rational(3, 8), Rational(1, 8)}, {Rational(5, 6), Rational(1, 6)},
      {Rational(1, 7), Rational(1, 7)},  {Rational(6, 7), Rational(1, 7)}};
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < qd.size(); ++i) {
    const int base = ceil_of(Rational(1) / qd[i].second) + 2;
    cells.push_back({qd[i].first, qd[i].second, base + static_cast<int>(i % 2)});
  }
  return cells;
}

SuiteResult run_section3(std::size_t, Rng&) {
  Recorder rec("section3");
  auto certify = [&](const std::function<ConstructionWitness()>& make, const json& where) {
    try {
      const ConstructionWitness w = make();
      w.verify();
      rec.check(true, {});
      return std::optional<ConstructionWitness>(w);
    } catch (const Error& e) {
      rec.check(false, [&] { return json{{"cell", where}, {"error", e.what()}}; });
      return std::optional<ConstructionWitness>();
    }
  };
  // Diameters bound every certificate from above; small games only.
  auto sandwich = [&](const ConstructionWitness& w) {
    if (w.game.n() > 8) return;
    const Rational d1 = diameter_l1(w.game).value;
    const Rational dinf = diameter_linf(w.game).value;
    rec.check(w.l1_distance <= d1 && w.linf_distance <= dinf, [&] {
      return json{{"witness", witness_json(w)}, {"diam_l1", d1.str()}, {"diam_linf", dinf.str()}};
    });
  };

  for (int s = 2; s <= 7; ++s) {
    for (int k = 1; k < s; ++k) {
      for (int t = 0; t <= 2; ++t) {
        const json where = {{"lemma", 31}, {"k", k}, {"s", s}, {"t", t}};
        auto l1 = certify([&] { return lemma31_witness(k, s, t, Norm::L1); }, where);
        auto linf = certify([&] { return lemma31_witness(k, s, t, Norm::Linf); }, where);
        if (l1) {
          rec.check(l1->guaranteed_l1 == max(Rational(1, 10 * k), Rational(1, 10 * (s - k))),
                    [&] { return json{{"cell", where}, {"witness", witness_json(*l1)}}; });
          sandwich(*l1);
        }
        if (linf) {
          rec.check(linf->guaranteed_linf == Rational(1, s) && linf->linf_distance >= Rational(1, s),
                    [&] { return json{{"cell", where}, {"witness", witness_json(*linf)}}; });
        }
      }
    }
  }
  for (int s = 1; s <= 8; ++s) {
    for (int t = 0; s + t <= 8; ++t) {
      if (s + t < 2) continue;
      const json where = {{"lemma", 32}, {"s", s}, {"t", t}};
      auto w = certify([&] { return lemma32_witness(s, t); }, where);
      if (w) {
        rec.check(w->l1_distance >= Rational(2, 3) && w->linf_distance >= Rational(1, 3),
                  [&] { return json{{"cell", where}, {"witness", witness_json(*w)}}; });
        sandwich(*w);
      }
    }
  }
  for (int i = 1; i <= 20; ++i) {
    const Rational q(i, 20);
    const int n = 2 + i % 5;
    certify([&] { return lemma33_witness(q, n); }, json{{"lemma", 33}, {"q", q.str()}, {"n", n}});
  }
  const std::vector<Rational> deltas34 = {
      Rational(1),     Rational(1, 2), Rational(2, 3),  Rational(2, 5), Rational(1, 3),  Rational(3, 10), Rational(1, 4),
      Rational(2, 9),  Rational(1, 5), Rational(3, 16), Rational(1, 6), Rational(2, 13), Rational(1, 7),  Rational(1, 8),
      Rational(3, 25), Rational(1, 9), Rational(1, 10), Rational(2, 21), Rational(1, 11), Rational(1, 12)};
  for (std::size_t i = 0; i < deltas34.size(); ++i) {
    const Rational& d = deltas34[i];
    const int n = ceil_of(Rational(1) / d) + 1 + static_cast<int>(i % 3);
    certify([&] { return lemma34_witness(d, n); }, json{{"lemma", 34}, {"delta", d.str()}, {"n", n}});
  }
  const std::vector<Rational> deltas35 = {
      Rational(9, 10), Rational(3, 4), Rational(2, 3), Rational(3, 5), Rational(1, 2), Rational(2, 5), Rational(1, 3),
      Rational(3, 10), Rational(2, 7), Rational(1, 4), Rational(2, 9), Rational(1, 5), Rational(1, 6), Rational(1, 7),
      Rational(1, 8),  Rational(1, 9), Rational(1, 10), Rational(1, 11), Rational(1, 12), Rational(1, 13)};
  for (const Rational& d : deltas35) {
    const int a = static_cast<int>((Rational(2) / (Rational(3) * d)).floor().get_si()) + 1;
    const int n = std::min(2 * a + 6, kMaxPlayers);
    certify([&] { return lemma35_witness(d, n); }, json{{"lemma", 35}, {"delta", d.str()}, {"n", n}});
  }
  for (const Cell& c : lemma36_cells()) {
    for (Norm norm : {Norm::L1, Norm::Linf}) {
      const json where = {{"lemma", 36}, {"q", c.q.str()}, {"delta", c.delta.str()}, {"n", c.n}, {"norm", to_string(norm)}};
      auto w = certify([&] { return lemma36_witness(c.q, c.delta, c.n, norm); }, where);
      if (w && norm == Norm::L1 && c.n <= 10) {
        const Rational d1 = diameter_l1(w->game).value;
        const Rational env = thm43_envelope(c.q, c.delta).basic;
        rec.check(*w->guaranteed_l1 <= d1 && d1 <= env,
                  [&] { return json{{"cell", where}, {"diam_l1", d1.str()}, {"envelope", env.str()}}; });
      }
    }
  }
  return rec.take();
}

SuiteResult run_section5(std::size_t samples, Rng& rng) {
  Recorder rec("section5");
  const std::vector<Cell> cells = {
      {Rational(1, 2), Rational(1, 4), 6},   {Rational(1, 2), Rational(1, 2), 4},  {Rational(3, 5), Rational(1, 5), 7},
      {Rational(1, 3), Rational(1, 3), 5},   {Rational(9, 10), Rational(1, 10), 12}, {Rational(1, 10), Rational(1, 10), 12},
      {Rational(2, 3), Rational(1, 6), 8},   {Rational(1, 4), Rational(1, 8), 10}, {Rational(3, 4), Rational(3, 10), 6},
      {Rational(2, 5), Rational(2, 7), 6}};
  const PowerIndex indices[] = {PowerIndex::ShapleyShubik, PowerIndex::Banzhaf};

  for (const Cell& c : cells) {
    for (PowerIndex index : indices) {
      const LowerBoundRecord r = prop54_harness(c.q, c.delta, c.n, index);
      rec.check(r.holds,
                [&] {
                  return json{{"q", c.q.str()}, {"delta", c.delta.str()}, {"n", c.n}, {"index", to_string(index)},
                              {"final_distance", r.final_distance.str()}, {"certified", r.certified.str()}};
                });
      const ConstructionWitness w = lemma36_witness(c.q, c.delta, c.n, Norm::L1);
      const WeightedRepresentation a(*w.quota_a, w.w_a);
      const WeightedRepresentation b(*w.quota_b, w.w_b);
      const PowerVector phi = power_index(w.game, index);
      for (Norm norm : {Norm::L1, Norm::Linf}) {
        const PairBound pb = pair_lower_bound(a, b, phi, norm);
        rec.check(pb.holds, [&] {
          return json{{"a", rep_json(a)}, {"b", rep_json(b)}, {"phi", strings(phi.values)}, {"norm", to_string(norm)}};
        });
      }
    }
  }

  // Triangle bound on the equal-game pairs with explicit quotas.
  std::vector<ConstructionWitness> pairs;
  for (int i = 1; i <= 4; ++i) pairs.push_back(lemma33_witness(Rational(i, 4), 4));
  for (const Rational& d : {Rational(3, 4), Rational(1, 2), Rational(1, 3), Rational(1, 5)}) {
    pairs.push_back(lemma35_witness(d, 12));
  }
  for (const ConstructionWitness& w : pairs) {
    const WeightedRepresentation a(*w.quota_a, w.w_a);
    const WeightedRepresentation b(*w.quota_b, w.w_b);
    for (PowerIndex index : indices) {
      const PowerVector phi = power_index(w.game, index);
      for (Norm norm : {Norm::L1, Norm::Linf}) {
        const PairBound pb = pair_lower_bound(a, b, phi, norm);
        rec.check(pb.holds, [&] { return json{{"witness", witness_json(w)}, {"norm", to_string(norm)}}; });
      }
    }
  }

  // Weight-to-power distance wherever the power vector completes to a representation.
  sample_games(samples, 5, rng, [&](const WeightedRepresentation& rep, const SimpleGame& v, const WeightPolytope&,
                                    const std::vector<WeightedRepresentation>& others) {
    for (PowerIndex index : indices) {
      const PowerVector phi = power_index(v, index);
      const Compatibility compat = representation_compatible(v, phi);
      if (!compat.compatible) continue;
      auto check_one = [&](const WeightedRepresentation& r) {
        const DistanceReport d = distance_report(r, phi);
        rec.check(d.bound.has_value() && d.within_bound, [&] {
          return json{{"rep", rep_json(r)}, {"phi", strings(phi.values)}, {"l1", d.l1.str()}};
        });
      };
      check_one(rep);
      for (const auto& other : others) check_one(other);
    }
  });
  return rec.take();
}

using Runner = SuiteResult (*)(std::size_t, Rng&);

const std::map<std::string, std::pair<Runner, std::size_t>, std::less<>>& registry() {
  static const std::map<std::string, std::pair<Runner, std::size_t>, std::less<>> suites = {
      {"lemma22", {&run_lemma22, 1000}},
      {"lemma23", {&run_lemma23, 1000}},
      {"thm43", {&run_thm43, 500}},
      {"lemma41", {[](std::size_t n, Rng& r) { return run_side("lemma41", Side::Winning, n, r); }, 200}},
      {"lemma42", {[](std::size_t n, Rng& r) { return run_side("lemma42", Side::Losing, n, r); }, 200}},
      {"section3", {&run_section3, 1}},
      {"section5", {&run_section5, 100}},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lemma22", "lemma23", "thm43",   "lemma41",
                                                 "lemma42", "section3", "section5"};
  return names;
}

std::size_t default_samples(std::string_view suite) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + std::string(suite));
  return it->second.second;
}

SuiteResult run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw std::invalid_argument("unknown suite: " + std::string(suite));
  Rng rng(seed);
  return it->second.first(samples == 0 ? it->second.second : samples, rng);
}

}  // namespace wvg::cli
