#pragma once

#include "rca/circuit.hpp"

#include <vector>

namespace rca {

/// The four cost numbers plus totals. Depths are dependency-DAG longest
/// paths counting only gates of the measured kind, so they never exceed any
/// time-slice layout of the same circuit.
struct MetricReport {
    uint64_t t_count = 0;
    uint64_t t_depth = 0;
    uint64_t cnot_count = 0;
    uint64_t cnot_depth = 0;
    uint64_t total_gate_count = 0;
    uint64_t total_depth = 0;

    bool operator==(const MetricReport& o) const {
        return t_count == o.t_count && t_depth == o.t_depth && cnot_count == o.cnot_count &&
               cnot_depth == o.cnot_depth && total_gate_count == o.total_gate_count &&
               total_depth == o.total_depth;
    }
};

/// Dependency DAG over gate indices: edge u -> v iff u precedes v, they share
/// a wire, and no gate between them touches that wire (per-wire transitive
/// reduction). Edges are deduplicated; adjacency lists are sorted.
struct Dag {
    std::vector<std::vector<uint32_t>> succ;
    std::vector<std::vector<uint32_t>> pred;
};

Dag build_dag(const Circuit& c);

/// Metrics of a Clifford+T circuit. Throws CompositeGatePresent if a
/// TOFFOLI/PERES/TR remains uncompiled.
MetricReport metrics(const Circuit& c);

/// ASAP layering: layer(g) = 1 + max layer over predecessors. The number of
/// layers equals the DAG longest path (Mirsky), which tests cross-check by
/// brute force on small instances.
std::vector<uint32_t> asap_layers(const Circuit& c);

}  // namespace rca
