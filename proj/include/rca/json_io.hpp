#pragma once

#include "rca/circuit.hpp"
#include "rca/compile.hpp"

#include <json.hpp>

#include <string>

namespace rca {

/// Circuit document fields: n_qubits, roles, gates, segments (+ optional
/// metadata added by the compiler). Gate order is execution order.
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

/// Adds {"metadata": {"mode": ..., "fallback_naive": ...}} to a document.
nlohmann::json compiled_to_json(const CompileResult& r);

void write_circuit_file(const Circuit& c, const std::string& path);
Circuit read_circuit_file(const std::string& path);

}  // namespace rca
