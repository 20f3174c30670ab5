#pragma once

#include "rca/circuit.hpp"

#include <string>

namespace rca {

enum class Family { CdkmShallow, CdkmCompact, TtkAdder, CdkmComparator, TtkComparator };

Family family_from_name(const std::string& name);
const char* family_name(Family f);
bool family_is_comparator(Family f);

/// Wires used by a family at width n: 2n+2 with one ancilla for the CDKM
/// layouts, 2n+1 without for the TTK layouts.
uint32_t family_wires(Family f, int n);

/// Builds the high-level circuit (X/CNOT/TOFFOLI/PERES/TR) for a family.
/// Adders map |a,b,z> to |a, a+b mod 2^n, z ^ carry_out>; comparators map
/// |a,b,z> to |a, b, z ^ (a<=b)>. Ancilla wires start and end at 0.
/// Throws NTooSmall for n < 1; n = 1 degenerates to the apex alone.
Circuit build(Family f, int n);

Circuit build_cdkm_shallow(int n);
Circuit build_cdkm_compact(int n);
Circuit build_ttk_adder(int n);
Circuit build_cdkm_comparator(int n);
Circuit build_ttk_comparator(int n);

/// Packs register values onto a basis state through the circuit's role map,
/// so wire layouts never leak into oracle comparisons.
uint64_t pack_registers(const Circuit& c, uint64_t a, uint64_t b, int z);

struct Registers {
    uint64_t a = 0;
    uint64_t b = 0;
    int z = 0;
    uint64_t ancilla = 0;
};

Registers unpack_registers(const Circuit& c, uint64_t basis);

/// Expected output basis state per the family contract.
uint64_t oracle_output(Family f, int n, const Circuit& c, uint64_t a, uint64_t b, int z);

}  // namespace rca
