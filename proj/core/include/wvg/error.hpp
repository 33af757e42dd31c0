#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wvg {

/// Failure categories reported by the library. Each maps onto a distinct
/// caller mistake or mathematical impossibility.
enum class Errc {
  Parse,
  InvalidRepresentation,
  InvalidGame,
  TooManyPlayers,
  DimensionMismatch,
  EpsilonTooLarge,
  MalformedProgram,
  NotInPolytope,
  NotWeighted,
  EmptyPolytope,
  BudgetZero,
  AnchorNotStrict,
  NotNormalized,
  ZeroVector,
  OutOfRange,
  PreconditionViolated,
  BadParameters,
  GamesDiffer,
  NotEfficient,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace wvg
