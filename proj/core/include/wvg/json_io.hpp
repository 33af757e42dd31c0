#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "wvg/bounds.hpp"
#include "wvg/constructions.hpp"
#include "wvg/game.hpp"
#include "wvg/polytope.hpp"
#include "wvg/power.hpp"

namespace wvg {

/// A game read from JSON, with its weighted representation when one was given.
struct GameInput {
  SimpleGame game;
  std::optional<WeightedRepresentation> representation;
};

/**
 * Parses {"n": 3, "quota": "2/1", "weights": ["1/1", ...]} or
 * {"n": 3, "minimal_winning": [[1, 2], [2, 3]]} with 1-based players.
 * Rationals may be given as "p/q" strings or JSON integers. Throws Parse on
 * malformed input and InvalidRepresentation / InvalidGame when the content
 * violates the game invariants.
 */
GameInput parse_game(std::string_view json_text);

// Serializations. Rationals are "p/q" strings, players are 1-based and
// absent optional values are null. The output is indented by two spaces.
std::string to_json(const WeightedRepresentation& rep);
std::string to_json(const SimpleGame& v);  // minimal winning form
std::string to_json(const DiameterCertificate& cert);
std::string to_json(const BoundReport& report);
std::string to_json(const PowerVector& phi);
std::string to_json(const ConstructionWitness& witness);
std::string to_json(const LowerBoundRecord& record);

}  // namespace wvg
