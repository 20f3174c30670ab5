#pragma once

#include "rca/circuit.hpp"

#include <string>

namespace rca {

/// OpenQASM 2.0 text for a Clifford+T circuit: fixed header, one register
/// q[N], gates as x/h/t/tdg/cx statements in execution order. Throws
/// CompositeGatePresent when composites remain.
std::string to_qasm2(const Circuit& c);

/// Minimal OpenQASM 2.0 syntax check for the emitted subset: header lines,
/// a single qreg declaration, well-formed gate statements with in-range
/// operands. Returns an empty string on success, else a diagnostic.
std::string check_qasm2(const std::string& text);

}  // namespace rca
