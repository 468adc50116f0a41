// JSON form of polynomials: a list of terms
//   {"numerator", "denominator", "half_exp_t0", "half_exp_t1", "y_degree"}
// Numerator and denominator are JSON integers when they fit in 64 bits and
// decimal strings otherwise.
#pragma once

#include <json.hpp>

#include "lgbridge/braid.hpp"
#include "lgbridge/scalar.hpp"

namespace lgbridge {

nlohmann::json to_json(const LaurentHalf& p);
nlohmann::json to_json(const LaurentHalf2& p);
nlohmann::json to_json(const ExtScalar& p);

/// Accepts any of the three forms; throws std::invalid_argument on bad input.
ExtScalar ext_scalar_from_json(const nlohmann::json& terms);
/// Throws std::invalid_argument when t1 or Y appears.
LaurentHalf laurent_from_json(const nlohmann::json& terms);

nlohmann::json to_json(const Unit& u);
nlohmann::json to_json(const BraidWord& b);

}  // namespace lgbridge
