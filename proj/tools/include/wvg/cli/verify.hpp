#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wvg::cli {

struct SuiteResult {
  std::string suite;
  std::size_t checks = 0;
  std::size_t violations = 0;
  /// JSON description of the first violating instance.
  std::optional<std::string> counterexample;

  bool passed() const { return violations == 0; }
};

/// lemma22, lemma23, thm43, lemma41, lemma42, section3, section5.
const std::vector<std::string>& suite_names();

/// Sample count used when the caller passes 0.
std::size_t default_samples(std::string_view suite);

/// Runs one property suite. Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(std::string_view suite, std::size_t samples, std::uint64_t seed);

}  // namespace wvg::cli
