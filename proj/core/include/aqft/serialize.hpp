#pragma once

#include "aqft/circuit.hpp"

#include <json.hpp>

#include <string>

namespace aqft {

inline constexpr int kCircuitSchemaVersion = 1;

/// Circuit <-> JSON (schema version 1). Dyadic angles are {"num", "den_pow2"};
/// numerators beyond int64 are written as decimal strings.
nlohmann::json to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DyadicAngle& a);
DyadicAngle angle_from_json(const nlohmann::json& j);

/// OpenQASM 2.0 text. Only coherent circuits are accepted; SynthRz leaves are
/// written as exact rz rotations.
std::string to_qasm(const Circuit& c);

}  // namespace aqft
