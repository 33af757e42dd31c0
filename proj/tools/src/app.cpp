#include "wvg/cli/app.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wvg/bounds.hpp"
#include "wvg/cli/sweep.hpp"
#include "wvg/cli/verify.hpp"
#include "wvg/constructions.hpp"
#include "wvg/error.hpp"
#include "wvg/json_io.hpp"
#include "wvg/power.hpp"

namespace wvg::cli {

namespace {

std::string read_source(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::Parse, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GameInput load_game(const std::string& path) { return parse_game(read_source(path)); }

std::string coalition_list(const std::vector<Coalition>& family) {
  std::string out;
  for (const auto& c : family) out += (out.empty() ? "" : " ") + c.str();
  return out.empty() ? "(none)" : out;
}

const char* role_name(PlayerRole role) {
  switch (role) {
    case PlayerRole::Null: return "null";
    case PlayerRole::Passer: return "passer";
    case PlayerRole::Neither: return "neither";
  }
  return "neither";
}

// "1-3" for a run of consecutive players, "1,3,4" otherwise (1-based).
std::string player_span(const std::vector<int>& players) {
  const bool run = players.back() - players.front() + 1 == static_cast<int>(players.size());
  if (run && players.size() > 2) return std::to_string(players.front() + 1) + "-" + std::to_string(players.back() + 1);
  std::string out;
  for (int p : players) out += (out.empty() ? "" : ",") + std::to_string(p + 1);
  return out;
}

std::string summary(const PlayerClassification& pc) {
  std::vector<std::string> parts;
  for (const auto& cls : pc.classes) {
    if (cls.size() > 1) parts.push_back("players " + player_span(cls) + " equivalent");
  }
  for (PlayerRole role : {PlayerRole::Null, PlayerRole::Passer}) {
    std::vector<int> members;
    for (std::size_t i = 0; i < pc.roles.size(); ++i) {
      if (pc.roles[i] == role) members.push_back(static_cast<int>(i));
    }
    if (members.empty()) continue;
    parts.push_back((members.size() == 1 ? "player " : "players ") + player_span(members) + " " + role_name(role));
  }
  if (parts.empty()) return "no equivalent pairs, null players or passers";
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

void cmd_analyze(const std::string& path, std::ostream& out) {
  const GameInput in = load_game(path);
  const SimpleGame& v = in.game;
  out << "players: " << v.n() << '\n';
  if (in.representation) {
    out << "representation: [" << in.representation->quota();
    const char* sep = "; ";
    for (const auto& w : in.representation->weights()) {
      out << sep << w;
      sep = ", ";
    }
    out << "]\n";
  }
  const auto winning = minimal_winning(v);
  const auto losing = maximal_losing(v);
  out << "minimal winning (" << winning.size() << "): " << coalition_list(winning) << '\n';
  out << "maximal losing (" << losing.size() << "): " << coalition_list(losing) << '\n';
  const PlayerClassification pc = classify_players(v);
  for (std::size_t i = 0; i < pc.roles.size(); ++i) out << "player " << i + 1 << ": " << role_name(pc.roles[i]) << '\n';
  std::string classes;
  for (const auto& cls : pc.classes) {
    std::string members;
    for (int p : cls) members += (members.empty() ? "" : ",") + std::to_string(p + 1);
    classes += (classes.empty() ? "{" : " {") + members + "}";
  }
  out << "equivalence classes: " << classes << '\n';
  out << "summary: " << summary(pc) << '\n';
  const WeightednessResult wr = is_weighted(v);
  out << "weighted: " << (wr.weighted ? "yes" : "no") << " (margin " << wr.margin << ")\n";
  const SimpleGame d = dual(v);
  out << "dual minimal winning (" << minimal_winning(d).size() << "): " << coalition_list(minimal_winning(d)) << '\n';
  out << "self-dual: " << (d == v ? "yes" : "no") << '\n';
}

void cmd_diameter(const std::string& path, const std::string& norm, std::ostream& out) {
  const GameInput in = load_game(path);
  const DiameterCertificate cert = norm == "l1" ? diameter_l1(in.game) : diameter_linf(in.game);
  out << to_json(cert) << '\n';
}

WeightedRepresentation require_representation(const GameInput& in, const char* command) {
  if (!in.representation) {
    throw Error(Errc::InvalidRepresentation, std::string(command) + " needs a game given by quota and weights");
  }
  return in.representation->normalized();
}

void cmd_bounds(const std::string& path, std::ostream& out) {
  const GameInput in = load_game(path);
  out << to_json(bound_report(require_representation(in, "bounds"))) << '\n';
}

struct ConstructArgs {
  int lemma = 0;
  std::optional<int> k, s, t, n;
  std::optional<std::string> q, delta;
  std::string norm = "l1";
};

template <class T>
const T& need(const std::optional<T>& value, const char* flag) {
  if (!value) throw Error(Errc::BadParameters, std::string("missing --") + flag);
  return *value;
}

void cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const Norm norm = a.norm == "l1" ? Norm::L1 : Norm::Linf;
  auto rational = [](const std::optional<std::string>& text, const char* flag) {
    return Rational::parse(need(text, flag));
  };
  ConstructionWitness w;
  switch (a.lemma) {
    case 31: w = lemma31_witness(need(a.k, "k"), need(a.s, "s"), a.t.value_or(0), norm); break;
    case 32: w = lemma32_witness(need(a.s, "s"), a.t.value_or(0)); break;
    case 33: w = lemma33_witness(rational(a.q, "q"), need(a.n, "n")); break;
    case 34: w = lemma34_witness(rational(a.delta, "delta"), need(a.n, "n")); break;
    case 35: w = lemma35_witness(rational(a.delta, "delta"), need(a.n, "n")); break;
    case 36: w = lemma36_witness(rational(a.q, "q"), rational(a.delta, "delta"), need(a.n, "n"), norm); break;
    default: throw Error(Errc::BadParameters, "--lemma must be one of 31..36");
  }
  out << to_json(w) << '\n';
}

PowerIndex index_of(const std::string& name) {
  if (name == "ssi") return PowerIndex::ShapleyShubik;
  if (name == "pbi") return PowerIndex::Banzhaf;
  return PowerIndex::BanzhafRaw;
}

void cmd_power(const std::string& path, const std::string& index, bool compare, std::ostream& out) {
  const GameInput in = load_game(path);
  const PowerVector phi = power_index(in.game, index_of(index));
  if (!compare) {
    out << to_json(phi) << '\n';
    return;
  }
  const WeightedRepresentation rep = require_representation(in, "power --compare");
  if (!phi.efficient()) throw Error(Errc::NotEfficient, "--compare needs an efficient index (ssi or pbi)");
  const Compatibility c = representation_compatible(in.game, phi);
  const DistanceReport d = distance_report(rep, phi);
  nlohmann::json j = nlohmann::json::parse(to_json(phi));
  j["compatible"] = c.compatible;
  j["compatible_quota"] = c.quota ? nlohmann::json(c.quota->str()) : nlohmann::json(nullptr);
  j["l1_distance"] = d.l1.str();
  j["linf_distance"] = d.linf.str();
  j["bound"] = d.bound ? nlohmann::json(d.bound->str()) : nlohmann::json(nullptr);
  j["within_bound"] = d.within_bound;
  out << j.dump(2) << '\n';
}

int cmd_verify(const std::string& suite, std::size_t samples, std::uint64_t seed, std::ostream& out) {
  std::vector<std::string> suites = suite == "all" ? suite_names() : std::vector<std::string>{suite};
  int code = kExitOk;
  for (const auto& name : suites) {
    const SuiteResult r = run_suite(name, samples, seed);
    out << "suite " << r.suite << ": " << r.checks << " checks, " << r.violations << " violations: "
        << (r.passed() ? "PASS" : "FAIL") << '\n';
    if (!r.passed()) {
      out << "counterexample: " << *r.counterexample << '\n';
      code = kExitVerificationFailed;
    }
  }
  return code;
}

int cmd_sweep(const SweepOptions& options, const std::string& path, std::ostream& out, std::ostream& err) {
  const SweepResult result = run_sweep(options);
  for (const auto& s : result.skipped) err << "skipped " << s << '\n';
  if (path.empty() || path == "-") {
    write_csv(out, result.rows);
    return kExitOk;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::Parse, "cannot write " + path);
  write_csv(file, result.rows);
  return kExitOk;
}

int exit_code_for(Errc code, bool constructing) {
  switch (code) {
    case Errc::Parse: return kExitParse;
    case Errc::EmptyPolytope: return kExitEmptyPolytope;
    case Errc::BadParameters: return kExitBadConstruction;
    case Errc::OutOfRange:
    case Errc::PreconditionViolated: return constructing ? kExitBadConstruction : kExitInvariant;
    default: return kExitInvariant;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of weighted voting games and their weight polytopes"};
  app.name("wvg");
  app.require_subcommand(1);
  std::function<int()> action;
  bool constructing = false;

  std::string game_path;
  auto* analyze = app.add_subcommand("analyze", "Coalition families, player classes, weightedness and the dual game");
  analyze->add_option("game", game_path, "Game JSON file, or - for stdin")->required();
  analyze->callback([&] { action = [&] { cmd_analyze(game_path, out); return 0; }; });

  std::string norm = "l1";
  auto* diameter = app.add_subcommand("diameter", "Exact diameter certificate of the weight polytope");
  diameter->add_option("game", game_path, "Game JSON file, or - for stdin")->required();
  diameter->add_option("--norm", norm, "l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
  diameter->callback([&] { action = [&] { cmd_diameter(game_path, norm, out); return 0; }; });

  auto* bounds = app.add_subcommand("bounds", "Closed-form bound report of a weighted representation");
  bounds->add_option("game", game_path, "Game JSON file, or - for stdin")->required();
  bounds->callback([&] { action = [&] { cmd_bounds(game_path, out); return 0; }; });

  ConstructArgs cargs;
  auto* construct = app.add_subcommand("construct", "Worst-case witness pair of one of the constructions 31..36");
  construct->add_option("--lemma", cargs.lemma, "Construction number")->required();
  construct->add_option("--k", cargs.k, "Quota of v_{k,s,t}");
  construct->add_option("--s", cargs.s, "Number of unit-weight players");
  construct->add_option("--t", cargs.t, "Number of null players");
  construct->add_option("--n", cargs.n, "Player count");
  construct->add_option("--q", cargs.q, "Relative quota, p/q");
  construct->add_option("--delta", cargs.delta, "Maximum relative weight, p/q");
  construct->add_option("--norm", cargs.norm, "Variant for 31 and 36: l1 or linf")->check(CLI::IsMember({"l1", "linf"}));
  construct->callback([&] {
    constructing = true;
    action = [&] { cmd_construct(cargs, out); return 0; };
  });

  std::string index = "ssi";
  bool compare = false;
  auto* power = app.add_subcommand("power", "Shapley-Shubik or Penrose-Banzhaf power vector");
  power->add_option("game", game_path, "Game JSON file, or - for stdin")->required();
  power->add_option("--index", index, "ssi, pbi or pbi_raw")->check(CLI::IsMember({"ssi", "pbi", "pbi_raw"}));
  power->add_flag("--compare", compare, "Also compare with the normalized weights");
  power->callback([&] { action = [&] { cmd_power(game_path, index, compare, out); return 0; }; });

  std::string suite = "all";
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  auto* verify = app.add_subcommand("verify", "Run a property suite with exact checks");
  verify->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(suite_choices));
  verify->add_option("--samples", samples, "Sample count (0 uses the suite default)");
  verify->add_option("--seed", seed, "Seed of the random generator");
  verify->callback([&] { action = [&] { return cmd_verify(suite, samples, seed, out); }; });

  std::string n_grid;
  std::string q_grid;
  std::string delta_grid;
  std::string out_path;
  SweepOptions sweep_options;
  auto* sweep = app.add_subcommand("sweep", "Diameters against the envelope over a (n, q, delta) grid, as CSV");
  sweep->add_option("--n", n_grid, "Player counts, comma separated")->required();
  sweep->add_option("--q-grid", q_grid, "Quotas, comma separated p/q")->required();
  sweep->add_option("--delta-grid", delta_grid, "Maximum weights, comma separated p/q")->required();
  sweep->add_option("--samples", sweep_options.samples, "Sampled second representations per cell");
  sweep->add_option("--seed", sweep_options.seed, "Seed of the random generator");
  sweep->add_option("--threads", sweep_options.threads, "Worker threads (0 = all cores)");
  sweep->add_option("--out", out_path, "CSV output path (default stdout)");
  sweep->callback([&] {
    action = [&] {
      sweep_options.ns = parse_int_grid(n_grid);
      sweep_options.qs = parse_rational_grid(q_grid);
      sweep_options.deltas = parse_rational_grid(delta_grid);
      return cmd_sweep(sweep_options, out_path, out, err);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    return action();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code(), constructing);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvariant;
  }
}

}  // namespace wvg::cli
