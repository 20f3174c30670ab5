#include "rca/compile.hpp"
#include "rca/semantics.hpp"

#include <algorithm>

namespace rca::templates {

// Gate lists transcribed from the T-depth-3 Toffoli and 5-CNOT Peres
// decompositions; derived variants are reorderings or adjoint-reversals
// whose equivalence verify_templates() enforces.

void toffoli_tdepth3(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    c.add(h(q3));
    c.add(cnot(q2, q3));
    c.add(cnot(q3, q1));
    c.add(tdg(q1));
    c.add(tdg(q2));
    c.add(t(q3));
    c.add(cnot(q2, q1));
    c.add(cnot(q2, q3));
    c.add(t(q1));
    c.add(tdg(q3));
    c.add(cnot(q3, q1));
    c.add(cnot(q1, q2));
    c.add(h(q3));
    c.add(tdg(q1));
    c.add(t(q2));
    c.add(cnot(q1, q2));
}

namespace {

void toffoli_body(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    c.add(h(q3));
    c.add(cnot(q2, q3));
    c.add(cnot(q3, q1));
    c.add(tdg(q1));
    c.add(tdg(q2));
    c.add(t(q3));
    c.add(cnot(q2, q1));
    c.add(cnot(q2, q3));
    c.add(t(q1));
    c.add(tdg(q3));
    c.add(cnot(q3, q1));
    c.add(h(q3));
}

}  // namespace

void toffoli_left(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    toffoli_body(c, q1, q2, q3);
    c.add(cnot(q1, q2));
    c.add(t(q2));
    c.add(cnot(q1, q2));
    c.add(tdg(q1));
}

void toffoli_right(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    c.add(t(q1));
    c.add(cnot(q1, q2));
    c.add(tdg(q2));
    c.add(cnot(q1, q2));
    // adjoint-reversed body
    c.add(h(q3));
    c.add(cnot(q3, q1));
    c.add(t(q3));
    c.add(tdg(q1));
    c.add(cnot(q2, q3));
    c.add(cnot(q2, q1));
    c.add(tdg(q3));
    c.add(t(q2));
    c.add(t(q1));
    c.add(cnot(q3, q1));
    c.add(cnot(q2, q3));
    c.add(h(q3));
}

void toffoli_cnot6(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    c.add(h(q3));
    c.add(cnot(q2, q3));
    c.add(tdg(q3));
    c.add(cnot(q1, q3));
    c.add(t(q3));
    c.add(cnot(q2, q3));
    c.add(tdg(q3));
    c.add(cnot(q1, q3));
    c.add(t(q2));
    c.add(t(q3));
    c.add(h(q3));
    c.add(cnot(q1, q2));
    c.add(t(q1));
    c.add(tdg(q2));
    c.add(cnot(q1, q2));
}

void peres_merged(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    // Toffoli followed by CNOT(q1,q2); the adjacent identical CNOT pair at
    // the tail cancels, leaving 6 CNOTs at T-depth 3.
    toffoli_body(c, q1, q2, q3);
    c.add(cnot(q1, q2));
    c.add(tdg(q1));
    c.add(t(q2));
}

void peres_cnot5(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    c.add(t(q1));
    c.add(t(q2));
    c.add(h(q3));
    c.add(cnot(q3, q2));
    c.add(cnot(q1, q3));
    c.add(tdg(q2));
    c.add(tdg(q3));
    c.add(cnot(q1, q2));
    c.add(cnot(q1, q3));
    c.add(t(q2));
    c.add(t(q3));
    c.add(cnot(q3, q2));
    c.add(tdg(q2));
    c.add(h(q3));
}

namespace {

void adjoint_reverse_into(Circuit& dst, const Circuit& src) {
    for (auto it = src.gates().rbegin(); it != src.gates().rend(); ++it) {
        Gate g = *it;
        g.kind = inverse_kind(g.kind);
        dst.add(g);
    }
}

}  // namespace

void tr_merged(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    Circuit fwd(c.n_qubits());
    peres_merged(fwd, q1, q2, q3);
    adjoint_reverse_into(c, fwd);
}

void tr_cnot5(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3) {
    Circuit fwd(c.n_qubits());
    peres_cnot5(fwd, q1, q2, q3);
    adjoint_reverse_into(c, fwd);
}

}  // namespace rca::templates

namespace rca {

double verify_templates() {
    struct Entry {
        GateKind composite;
        void (*emit)(Circuit&, uint32_t, uint32_t, uint32_t);
    };
    const Entry entries[] = {
        {GateKind::TOFFOLI, templates::toffoli_tdepth3},
        {GateKind::TOFFOLI, templates::toffoli_left},
        {GateKind::TOFFOLI, templates::toffoli_right},
        {GateKind::TOFFOLI, templates::toffoli_cnot6},
        {GateKind::PERES, templates::peres_merged},
        {GateKind::PERES, templates::peres_cnot5},
        {GateKind::TR, templates::tr_merged},
        {GateKind::TR, templates::tr_cnot5},
    };
    double worst = 0;
    for (const auto& e : entries) {
        Circuit c(3);
        e.emit(c, 0, 1, 2);
        UnitaryMatrix got = full_unitary(c);
        UnitaryMatrix want = permutation_unitary(gate_permutation(e.composite));
        double dev = max_deviation(got, want);
        worst = std::max(worst, dev);
        if (dev > 1e-9)
            throw Error(ErrorCode::UnsupportedComposite, "template fails unitary check");
    }
    return worst;
}

}  // namespace rca
