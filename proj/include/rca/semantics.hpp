#pragma once

#include "rca/circuit.hpp"

#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace rca {

using cplx = std::complex<double>;

/// Basis-state bijection of a reversible gate or circuit over k wires.
/// Local basis index bit j carries the value of gate wire j (q1 = bit 0).
struct PermutationTable {
    int arity = 0;
    std::vector<uint32_t> map;  // size 2^arity

    bool is_bijection() const;
    bool operator==(const PermutationTable& o) const { return arity == o.arity && map == o.map; }
};

/// Basis action of a reversible-classical gate kind. Throws NotClassical for
/// H/T/TDG. Semantics (wire order q1,q2,q3 = a,b,c):
///   TOFFOLI: c ^= a&b;  PERES: (a, a^b, c^(a&b));  TR: (a, a^b, c^(a&~b)).
/// These tables are pinned by the symbol-relation checks in the tests, not
/// trusted from any single figure.
PermutationTable gate_permutation(GateKind kind);

/// Composition p2 after p1 (apply p1 first).
PermutationTable compose(const PermutationTable& p1, const PermutationTable& p2);

PermutationTable identity_permutation(int arity);

/// Applies a reversible-classical circuit to a basis state (little-endian:
/// bit w of `input` is wire w). Throws NotClassical if H/T/TDG present.
uint64_t simulate_permutation(const Circuit& c, uint64_t input);

/// All basis states where `actual` and `claimed` disagree.
std::vector<uint32_t> mismatches(const PermutationTable& actual, const PermutationTable& claimed);

/// 2^k-row text rendering (input bits, output bits), wire q1 printed first.
std::string to_table_string(const PermutationTable& p);

/// Claim check against the built-in semantics of `kind`.
std::vector<uint32_t> check_claimed_mapping(GateKind kind, const PermutationTable& claimed);

/// Dense state over n_qubits wires, amplitudes in basis order.
struct Statevector {
    uint32_t n_qubits = 0;
    std::vector<cplx> amps;

    static Statevector basis(uint32_t n_qubits, uint64_t index);
    double norm() const;
};

/// Applies every gate's unitary in order. Composite gates act as basis
/// permutations. Throws DimensionMismatch when sizes disagree.
Statevector simulate_statevector(const Circuit& c, const Statevector& in);

/// Sparse map-based state; exact same semantics as the dense simulator but
/// cost proportional to the number of nonzero amplitudes. The circuits here
/// keep basis inputs within a handful of branches, so verification sweeps
/// stay cheap at any register size.
struct SparseState {
    uint32_t n_qubits = 0;
    std::unordered_map<uint64_t, cplx> amps;

    static SparseState basis(uint32_t n_qubits, uint64_t index);
    /// Amplitude on a basis state (0 if absent).
    cplx amp(uint64_t index) const;
    double norm() const;
};

SparseState simulate_sparse(const Circuit& c, SparseState state);

/// Row-major 2^n x 2^n matrix.
struct UnitaryMatrix {
    uint32_t n_qubits = 0;
    std::vector<cplx> m;

    cplx at(uint64_t row, uint64_t col) const { return m[(row << n_qubits) + col]; }
};

/// Product of gate unitaries; column j is the evolved basis state j.
/// Throws TooLarge above 12 qubits.
UnitaryMatrix full_unitary(const Circuit& c);

UnitaryMatrix permutation_unitary(const PermutationTable& p);

/// Largest entry-wise deviation |a - b| (no global-phase slack).
double max_deviation(const UnitaryMatrix& a, const UnitaryMatrix& b);

/// Carry string of Eq. (1) plus sum bits of Eq. (2): c has n+1 entries with
/// c[0] = 0, s has n+1 entries with s[n] = c[n].
struct CarryString {
    std::vector<uint8_t> c;
    std::vector<uint8_t> s;

    uint64_t sum_value() const;
};

/// Classical ripple-carry addition oracle. Throws OutOfRange unless
/// 0 <= a,b < 2^n.
CarryString classical_ripple_add(uint64_t a, uint64_t b, int n);

/// 1 iff a <= b.
inline int compare_le(uint64_t a, uint64_t b) { return a <= b ? 1 : 0; }

}  // namespace rca
