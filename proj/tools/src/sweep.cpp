#include "wvg/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>
#include <tuple>

#include "wvg/bounds.hpp"
#include "wvg/cli/sampling.hpp"
#include "wvg/constructions.hpp"
#include "wvg/error.hpp"

namespace wvg::cli {

namespace {

std::vector<std::string> split(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  bool any = false;
  for (char c : text) {
    if (c == ',') {
      parts.push_back(current);
      current.clear();
      any = true;
    } else if (c != ' ' && c != '\t') {
      current += c;
      any = true;
    }
  }
  if (any) parts.push_back(current);
  for (const auto& p : parts) {
    if (p.empty()) throw Error(Errc::Parse, "empty entry in grid \"" + std::string(text) + "\"");
  }
  return parts;
}

struct CellKey {
  int n;
  Rational q;
  Rational delta;
};

std::optional<SweepRow> measure(const CellKey& cell, std::size_t samples, std::uint64_t seed) {
  const ConstructionWitness w = lemma36_witness(cell.q, cell.delta, cell.n, Norm::L1);
  const WeightPolytope p(w.game);
  SweepRow row;
  row.n = cell.n;
  row.q = cell.q;
  row.delta = cell.delta;
  row.diam_l1 = diameter_l1(p).value;
  row.diam_linf = diameter_linf(p).value;
  const Envelope env = thm43_envelope(cell.q, cell.delta);
  row.thm43_basic = env.basic;
  row.thm43_refined = env.refined;
  row.lemma36_guarantee = *w.guaranteed_l1;
  row.tightness_ratio = row.diam_l1 / row.thm43_basic;

  Rng rng(seed);
  PolytopeOptimizer optimizer(p);
  const Completion anchor = representable_point(w.game);
  row.sampled_max_l1 = Rational(0);
  for (std::size_t i = 0; i < samples; ++i) {
    const WeightedRepresentation other = random_secondary(rng, optimizer, w.game, anchor);
    row.sampled_max_l1 = max(row.sampled_max_l1, l1_distance(w.w_a, other.weights()));
  }
  return row;
}

void put(std::ostream& out, const Rational& r) { out << ',' << r.str() << ',' << r.decimal(20); }

}  // namespace

std::vector<Rational> parse_rational_grid(std::string_view text) {
  std::vector<Rational> values;
  for (const auto& part : split(text)) values.push_back(Rational::parse(part));
  return values;
}

std::vector<int> parse_int_grid(std::string_view text) {
  std::vector<int> values;
  for (const auto& part : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || v <= 0) throw Error(Errc::Parse, "bad player count \"" + part + "\"");
    values.push_back(v);
  }
  return values;
}

SweepResult run_sweep(const SweepOptions& options) {
  std::vector<CellKey> cells;
  for (int n : options.ns) {
    for (const auto& q : options.qs) {
      for (const auto& d : options.deltas) cells.push_back({n, q, d});
    }
  }
  auto key = [](const CellKey& c) { return std::tie(c.n, c.q, c.delta); };
  std::sort(cells.begin(), cells.end(), [&](const CellKey& a, const CellKey& b) { return key(a) < key(b); });
  cells.erase(std::unique(cells.begin(), cells.end(), [&](const CellKey& a, const CellKey& b) { return key(a) == key(b); }),
              cells.end());

  std::vector<std::optional<SweepRow>> rows(cells.size());
  std::vector<std::string> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        if (cells[i].n > kMaxL1Players) throw Error(Errc::OutOfRange, "needs n <= 16 for the L1 diameter");
        rows[i] = measure(cells[i], options.samples, options.seed + i);
      } catch (const Error& e) {
        errors[i] = e.what();
      }
    }
  };
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(cells.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }

  SweepResult result;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (rows[i]) {
      result.rows.push_back(std::move(*rows[i]));
    } else {
      result.skipped.push_back("n=" + std::to_string(cells[i].n) + " q=" + cells[i].q.str() +
                               " delta=" + cells[i].delta.str() + ": " + errors[i]);
    }
  }
  return result;
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "n";
  for (const char* name : {"q", "delta", "diam_l1", "diam_linf", "thm43_basic", "thm43_refined", "lemma36_guarantee",
                           "tightness_ratio", "sampled_max_l1"}) {
    out << ',' << name << ',' << name << "_decimal";
  }
  out << '\n';
  for (const SweepRow& r : rows) {
    out << r.n;
    put(out, r.q);
    put(out, r.delta);
    put(out, r.diam_l1);
    put(out, r.diam_linf);
    put(out, r.thm43_basic);
    if (r.thm43_refined) {
      put(out, *r.thm43_refined);
    } else {
      out << ",,";
    }
    put(out, r.lemma36_guarantee);
    put(out, r.tightness_ratio);
    put(out, r.sampled_max_l1);
    out << '\n';
  }
}

}  // namespace wvg::cli
