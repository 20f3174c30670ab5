#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rca {

enum class ErrorCode {
    RegisterMismatch,
    CompositeGatePresent,
    NonInvertibleComposite,
    NotClassical,
    DimensionMismatch,
    TooLarge,
    TooLargeForExhaustive,
    OutOfRange,
    ArityMismatch,
    NTooSmall,
    UnsupportedComposite,
    MissingSegments,
    SchemaError,
    BadGate,
};

/// Library-wide exception carrying a machine-readable code.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

enum class GateKind : uint8_t { X, H, T, TDG, CNOT, TOFFOLI, PERES, TR };

constexpr int arity(GateKind k) {
    switch (k) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::T:
        case GateKind::TDG: return 1;
        case GateKind::CNOT: return 2;
        default: return 3;
    }
}

constexpr bool is_composite(GateKind k) {
    return k == GateKind::TOFFOLI || k == GateKind::PERES || k == GateKind::TR;
}

/// Reversible-classical gates act as permutations of the computational basis.
constexpr bool is_classical(GateKind k) {
    return k == GateKind::X || k == GateKind::CNOT || is_composite(k);
}

constexpr bool is_t_family(GateKind k) { return k == GateKind::T || k == GateKind::TDG; }

/// JSON / QASM-facing lowercase name ("x", "tdg", "cnot", ...).
const char* kind_name(GateKind k);

/// Inverse of kind_name; throws SchemaError on unknown names.
GateKind kind_from_name(const std::string& name);

/// Adjoint kind. PERES <-> TR (their permutation tables are mutual
/// inverses, checked once in the semantics module).
GateKind inverse_kind(GateKind k);

/// One gate instance. Wire order for 3-qubit kinds follows the symbol:
/// q(0)=q1 (solid control), q(1)=q2, q(2)=q3 (target wire).
/// For CNOT, q(0) is the control and q(1) the target.
struct Gate {
    GateKind kind;
    std::array<uint32_t, 3> qubits{};

    Gate(GateKind k, uint32_t a) : kind(k), qubits{a, 0, 0} { check_arity(1); }
    Gate(GateKind k, uint32_t a, uint32_t b) : kind(k), qubits{a, b, 0} {
        check_arity(2);
        if (a == b) throw Error(ErrorCode::BadGate, "gate qubits must be distinct");
    }
    Gate(GateKind k, uint32_t a, uint32_t b, uint32_t c) : kind(k), qubits{a, b, c} {
        check_arity(3);
        if (a == b || a == c || b == c) throw Error(ErrorCode::BadGate, "gate qubits must be distinct");
    }

    int num_qubits() const { return arity(kind); }
    uint32_t q(int i) const { return qubits[static_cast<size_t>(i)]; }

    uint32_t control() const { return qubits[0]; }
    uint32_t target() const { return qubits[static_cast<size_t>(num_qubits() - 1)]; }

    bool operator==(const Gate& o) const {
        if (kind != o.kind) return false;
        for (int i = 0; i < num_qubits(); ++i)
            if (qubits[static_cast<size_t>(i)] != o.qubits[static_cast<size_t>(i)]) return false;
        return true;
    }
    bool operator!=(const Gate& o) const { return !(*this == o); }

private:
    void check_arity(int n) const {
        if (arity(kind) != n) throw Error(ErrorCode::ArityMismatch, "wrong qubit count for gate kind");
    }
};

/// Convenience constructors, named after the circuit diagrams.
inline Gate x(uint32_t q) { return {GateKind::X, q}; }
inline Gate h(uint32_t q) { return {GateKind::H, q}; }
inline Gate t(uint32_t q) { return {GateKind::T, q}; }
inline Gate tdg(uint32_t q) { return {GateKind::TDG, q}; }
inline Gate cnot(uint32_t c, uint32_t t) { return {GateKind::CNOT, c, t}; }
inline Gate toffoli(uint32_t c1, uint32_t c2, uint32_t t) { return {GateKind::TOFFOLI, c1, c2, t}; }
inline Gate peres(uint32_t q1, uint32_t q2, uint32_t q3) { return {GateKind::PERES, q1, q2, q3}; }
inline Gate tr(uint32_t q1, uint32_t q2, uint32_t q3) { return {GateKind::TR, q1, q2, q3}; }

}  // namespace rca
