#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wvg/rational.hpp"

namespace wvg::cli {

struct SweepOptions {
  std::vector<int> ns;
  std::vector<Rational> qs;
  std::vector<Rational> deltas;
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

/// One grid cell: the envelope construction's game for (n, q, delta) and its measurements.
struct SweepRow {
  int n = 0;
  Rational q;
  Rational delta;
  Rational diam_l1;
  Rational diam_linf;
  Rational thm43_basic;
  std::optional<Rational> thm43_refined;
  Rational lemma36_guarantee;
  Rational tightness_ratio;  // diam_l1 / thm43_basic
  /// Largest L1 distance from the construction's weights to a sampled second representation.
  Rational sampled_max_l1;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // sorted by (n, q, delta)
  std::vector<std::string> skipped;  // cells outside the construction's domain
};

/// Comma-separated rationals; the empty string is the empty grid. Throws Error(Parse).
std::vector<Rational> parse_rational_grid(std::string_view text);
/// Comma-separated positive integers. Throws Error(Parse).
std::vector<int> parse_int_grid(std::string_view text);

SweepResult run_sweep(const SweepOptions& options);

/// CSV with a header row and LF line endings; every rational gets a "p/q" and a decimal column.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace wvg::cli
