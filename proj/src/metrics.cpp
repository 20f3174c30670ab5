#include "rca/metrics.hpp"

#include <algorithm>

namespace rca {

Dag build_dag(const Circuit& c) {
    const auto& gates = c.gates();
    Dag dag;
    dag.succ.assign(gates.size(), {});
    dag.pred.assign(gates.size(), {});
    // last gate seen on each wire; an edge goes from it to the next gate on
    // that wire, which is exactly the per-wire transitive reduction.
    std::vector<int64_t> last(c.n_qubits(), -1);
    for (uint32_t v = 0; v < gates.size(); ++v) {
        const Gate& g = gates[v];
        for (int i = 0; i < g.num_qubits(); ++i) {
            int64_t u = last[g.q(i)];
            if (u >= 0) {
                auto& s = dag.succ[static_cast<size_t>(u)];
                if (std::find(s.begin(), s.end(), v) == s.end()) {
                    s.push_back(v);
                    dag.pred[v].push_back(static_cast<uint32_t>(u));
                }
            }
            last[g.q(i)] = v;
        }
    }
    for (auto& s : dag.succ) std::sort(s.begin(), s.end());
    for (auto& p : dag.pred) std::sort(p.begin(), p.end());
    return dag;
}

namespace {

// Longest path over the per-wire dependency order, counting only gates for
// which `counts` is true. Equivalent to the DAG longest path since storage
// order is topological.
uint64_t weighted_depth(const Circuit& c, bool (*counts)(GateKind)) {
    std::vector<uint64_t> frontier(c.n_qubits(), 0);
    uint64_t best = 0;
    for (const Gate& g : c.gates()) {
        uint64_t d = 0;
        for (int i = 0; i < g.num_qubits(); ++i) d = std::max(d, frontier[g.q(i)]);
        if (counts(g.kind)) ++d;
        for (int i = 0; i < g.num_qubits(); ++i) frontier[g.q(i)] = d;
        best = std::max(best, d);
    }
    return best;
}

}  // namespace

MetricReport metrics(const Circuit& c) {
    MetricReport r;
    for (const Gate& g : c.gates()) {
        if (is_composite(g.kind))
            throw Error(ErrorCode::CompositeGatePresent,
                        "metrics requires a Clifford+T circuit; compile composites first");
        if (is_t_family(g.kind)) ++r.t_count;
        if (g.kind == GateKind::CNOT) ++r.cnot_count;
    }
    r.total_gate_count = c.size();
    r.t_depth = weighted_depth(c, [](GateKind k) { return is_t_family(k); });
    r.cnot_depth = weighted_depth(c, [](GateKind k) { return k == GateKind::CNOT; });
    r.total_depth = weighted_depth(c, [](GateKind) { return true; });
    return r;
}

std::vector<uint32_t> asap_layers(const Circuit& c) {
    std::vector<uint64_t> frontier(c.n_qubits(), 0);
    std::vector<uint32_t> layer(c.size(), 0);
    for (size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate(i);
        uint64_t d = 0;
        for (int k = 0; k < g.num_qubits(); ++k) d = std::max(d, frontier[g.q(k)]);
        ++d;
        for (int k = 0; k < g.num_qubits(); ++k) frontier[g.q(k)] = d;
        layer[i] = static_cast<uint32_t>(d);
    }
    return layer;
}

}  // namespace rca
