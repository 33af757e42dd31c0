#include "wvg/json_io.hpp"

#include <json.hpp>

#include "wvg/error.hpp"

namespace wvg {

namespace {

using nlohmann::json;

Rational read_rational(const json& j, const char* what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw Error(Errc::Parse, std::string(what) + " must be a \"p/q\" string or an integer");
}

json rationals(std::span<const Rational> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

json optional_rational(const std::optional<Rational>& r) { return r ? json(r->str()) : json(nullptr); }

json optional_int(const std::optional<int>& i) { return i ? json(*i) : json(nullptr); }

json players(const Coalition& s) {
  json out = json::array();
  for (int p : s.members()) out.push_back(p + 1);
  return out;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

GameInput parse_game(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(Errc::Parse, "game must be a JSON object");
  if (!j.contains("n") || !j["n"].is_number_integer()) throw Error(Errc::Parse, "game needs an integer \"n\"");
  const long n = j["n"].get<long>();
  if (n < 1 || n > kMaxPlayers) throw Error(Errc::InvalidGame, "n must lie in 1..24");

  if (j.contains("weights")) {
    if (!j.contains("quota")) throw Error(Errc::Parse, "weighted game needs a \"quota\"");
    if (!j["weights"].is_array()) throw Error(Errc::Parse, "\"weights\" must be an array");
    RationalVector w;
    for (const auto& x : j["weights"]) w.push_back(read_rational(x, "weight"));
    if (w.size() != static_cast<std::size_t>(n)) throw Error(Errc::Parse, "\"weights\" must have n entries");
    WeightedRepresentation rep(read_rational(j["quota"], "quota"), std::move(w));
    SimpleGame game = realize(rep);
    return {std::move(game), std::move(rep)};
  }
  if (j.contains("minimal_winning")) {
    if (!j["minimal_winning"].is_array()) throw Error(Errc::Parse, "\"minimal_winning\" must be an array");
    std::vector<Coalition> generators;
    for (const auto& c : j["minimal_winning"]) {
      if (!c.is_array()) throw Error(Errc::Parse, "each minimal winning coalition must be an array");
      std::vector<int> members;
      for (const auto& p : c) {
        if (!p.is_number_integer()) throw Error(Errc::Parse, "players must be integers");
        const long player = p.get<long>();
        if (player < 1 || player > n) throw Error(Errc::InvalidGame, "player index out of range");
        members.push_back(static_cast<int>(player - 1));
      }
      generators.push_back(Coalition::of(static_cast<int>(n), members));
    }
    return {SimpleGame::from_winning_generators(static_cast<int>(n), generators), std::nullopt};
  }
  throw Error(Errc::Parse, "game needs \"weights\" or \"minimal_winning\"");
}

std::string to_json(const WeightedRepresentation& rep) {
  return dump({{"n", rep.n()}, {"quota", rep.quota().str()}, {"weights", rationals(rep.weights())}});
}

std::string to_json(const SimpleGame& v) {
  json mw = json::array();
  for (const auto& s : minimal_winning(v)) mw.push_back(players(s));
  return dump({{"n", v.n()}, {"minimal_winning", mw}});
}

std::string to_json(const DiameterCertificate& cert) {
  return dump({{"norm", to_string(cert.norm)},
               {"value", cert.value.str()},
               {"witness_a", rationals(cert.witness_a)},
               {"witness_b", rationals(cert.witness_b)}});
}

std::string to_json(const BoundReport& r) {
  return dump({{"q", r.q.str()},
               {"delta", r.delta.str()},
               {"alpha", r.alpha.str()},
               {"laakso", r.laakso.str()},
               {"thm43_basic", r.thm43_basic.str()},
               {"thm43_refined", optional_rational(r.thm43_refined)},
               {"lemma41", r.lemma41.str()},
               {"lemma42", optional_rational(r.lemma42)}});
}

std::string to_json(const PowerVector& phi) {
  return dump({{"index", to_string(phi.index)}, {"values", rationals(phi.values)}});
}

std::string to_json(const ConstructionWitness& w) {
  const ConstructionParams& p = w.params;
  json params = {{"k", optional_int(p.k)},           {"s", optional_int(p.s)},
                 {"t", optional_int(p.t)},           {"a", optional_int(p.a)},
                 {"b", optional_int(p.b)},           {"n", optional_int(p.n)},
                 {"gamma", optional_rational(p.gamma)}, {"epsilon", optional_rational(p.epsilon)},
                 {"delta", optional_rational(p.delta)}, {"q", optional_rational(p.q)},
                 {"budget", optional_rational(p.budget)}};
  json mw = json::array();
  for (const auto& s : minimal_winning(w.game)) mw.push_back(players(s));
  return dump({{"construction", w.construction},
               {"variant", to_string(w.variant)},
               {"game", {{"n", w.game.n()}, {"minimal_winning", mw}}},
               {"rep_a", {{"quota", optional_rational(w.quota_a)}, {"weights", rationals(w.w_a)}}},
               {"rep_b", {{"quota", optional_rational(w.quota_b)}, {"weights", rationals(w.w_b)}}},
               {"l1_distance", w.l1_distance.str()},
               {"linf_distance", w.linf_distance.str()},
               {"guaranteed_l1", optional_rational(w.guaranteed_l1)},
               {"guaranteed_linf", optional_rational(w.guaranteed_linf)},
               {"params", params}});
}

std::string to_json(const LowerBoundRecord& r) {
  return dump({{"q", r.q.str()},
               {"delta", r.delta.str()},
               {"n", r.n},
               {"index", to_string(r.index)},
               {"k", r.k},
               {"s", r.s},
               {"t", r.t},
               {"w", rationals(r.w)},
               {"envelope", r.envelope.str()},
               {"lambda", r.lambda.str()},
               {"w_first", rationals(r.w_first)},
               {"w_second", rationals(r.w_second)},
               {"pair_distance", r.pair_distance.str()},
               {"phi", rationals(r.phi.values)},
               {"first_distance", r.first_distance.str()},
               {"second_distance", r.second_distance.str()},
               {"w_bar", rationals(r.w_bar)},
               {"quota_bar", r.quota_bar.str()},
               {"final_distance", r.final_distance.str()},
               {"certified", r.certified.str()},
               {"holds", r.holds}});
}

}  // namespace wvg
