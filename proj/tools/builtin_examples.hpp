#pragma once

#include <string>

#include "json.hpp"

namespace newton::examples {

/// Computes the built-in worked examples: the plane staircase
/// threshold, the pinched-polytope family at (3, 4), the cusp and
/// inseparable binomial families in small characteristic, and the
/// weight-order demo. Every value is computed, not copied.
nlohmann::ordered_json compute_all();

/// The checked-in expected output; `newton paper-examples` diffs
/// against this.
const std::string& expected_json_text();

}  // namespace newton::examples
