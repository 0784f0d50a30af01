#pragma once

#include <json.hpp>

#include "quartet/codes.hpp"
#include "quartet/invariants.hpp"
#include "quartet/stationary.hpp"

namespace quartet {

// State files: {"n": <int>, "amplitudes": [[re, im], ...]} with 2^n entries
// in binary ket order, qubit 1 most significant.
nlohmann::json state_to_json(const PureState& s);
PureState state_from_json(const nlohmann::json& j);

// Cartan points: {"z": [[re, im], [re, im], [re, im], [re, im]]}.
nlohmann::json point_to_json(const CartanPoint& z);
CartanPoint point_from_json(const nlohmann::json& j);

nlohmann::json fingerprint_to_json(const InvariantFingerprint& fp);
nlohmann::json report_to_json(const StationaryReport& r);
nlohmann::json purity_to_json(const PurityReport& r);

}  // namespace quartet
