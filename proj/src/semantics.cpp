#include "rca/semantics.hpp"

#include <cmath>
#include <numbers>

namespace rca {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

uint32_t apply_classical_bits(GateKind kind, uint32_t bits) {
    uint32_t a = bits & 1u, b = (bits >> 1) & 1u, c = (bits >> 2) & 1u;
    switch (kind) {
        case GateKind::X: return bits ^ 1u;
        case GateKind::CNOT: return a ? bits ^ 2u : bits;
        case GateKind::TOFFOLI: return (a & b) ? bits ^ 4u : bits;
        case GateKind::PERES: {
            uint32_t nb = a ^ b, nc = c ^ (a & b);
            return a | (nb << 1) | (nc << 2);
        }
        case GateKind::TR: {
            uint32_t nb = a ^ b, nc = c ^ (a & (b ^ 1u));
            return a | (nb << 1) | (nc << 2);
        }
        default: throw Error(ErrorCode::NotClassical, "gate has no basis permutation");
    }
}

}  // namespace

bool PermutationTable::is_bijection() const {
    std::vector<bool> seen(map.size(), false);
    for (auto v : map) {
        if (v >= map.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

PermutationTable gate_permutation(GateKind kind) {
    if (!is_classical(kind)) throw Error(ErrorCode::NotClassical, "gate has no basis permutation");
    PermutationTable p;
    p.arity = arity(kind);
    p.map.resize(1u << p.arity);
    for (uint32_t i = 0; i < p.map.size(); ++i) p.map[i] = apply_classical_bits(kind, i);
    return p;
}

PermutationTable compose(const PermutationTable& p1, const PermutationTable& p2) {
    if (p1.arity != p2.arity) throw Error(ErrorCode::ArityMismatch, "permutation arity mismatch");
    PermutationTable out;
    out.arity = p1.arity;
    out.map.resize(p1.map.size());
    for (uint32_t i = 0; i < p1.map.size(); ++i) out.map[i] = p2.map[p1.map[i]];
    return out;
}

PermutationTable identity_permutation(int arity) {
    PermutationTable p;
    p.arity = arity;
    p.map.resize(1u << arity);
    for (uint32_t i = 0; i < p.map.size(); ++i) p.map[i] = i;
    return p;
}

uint64_t simulate_permutation(const Circuit& c, uint64_t input) {
    uint64_t state = input;
    for (const Gate& g : c.gates()) {
        if (!is_classical(g.kind))
            throw Error(ErrorCode::NotClassical, "permutation simulation requires classical gates");
        uint32_t bits = 0;
        for (int i = 0; i < g.num_qubits(); ++i) bits |= static_cast<uint32_t>((state >> g.q(i)) & 1u) << i;
        uint32_t out = apply_classical_bits(g.kind, bits);
        for (int i = 0; i < g.num_qubits(); ++i) {
            uint64_t mask = 1ull << g.q(i);
            state = ((out >> i) & 1u) ? (state | mask) : (state & ~mask);
        }
    }
    return state;
}

std::vector<uint32_t> mismatches(const PermutationTable& actual, const PermutationTable& claimed) {
    if (actual.arity != claimed.arity || actual.map.size() != claimed.map.size())
        throw Error(ErrorCode::ArityMismatch, "claim arity mismatch");
    std::vector<uint32_t> out;
    for (uint32_t i = 0; i < actual.map.size(); ++i)
        if (actual.map[i] != claimed.map[i]) out.push_back(i);
    return out;
}

std::vector<uint32_t> check_claimed_mapping(GateKind kind, const PermutationTable& claimed) {
    return mismatches(gate_permutation(kind), claimed);
}

std::string to_table_string(const PermutationTable& p) {
    std::string out;
    for (uint32_t i = 0; i < p.map.size(); ++i) {
        for (int b = 0; b < p.arity; ++b) out += static_cast<char>('0' + ((i >> b) & 1u));
        out += " -> ";
        for (int b = 0; b < p.arity; ++b) out += static_cast<char>('0' + ((p.map[i] >> b) & 1u));
        out += '\n';
    }
    return out;
}

Statevector Statevector::basis(uint32_t n_qubits, uint64_t index) {
    Statevector s;
    s.n_qubits = n_qubits;
    s.amps.assign(1ull << n_qubits, cplx{0.0, 0.0});
    s.amps[index] = 1.0;
    return s;
}

double Statevector::norm() const {
    double n = 0;
    for (const auto& a : amps) n += std::norm(a);
    return std::sqrt(n);
}

namespace {

const cplx kTPhase{kInvSqrt2, kInvSqrt2};        // e^{i pi/4}
const cplx kTdgPhase{kInvSqrt2, -kInvSqrt2};

void apply_gate_dense(std::vector<cplx>& amps, const Gate& g) {
    const uint64_t dim = amps.size();
    switch (g.kind) {
        case GateKind::H: {
            uint64_t m = 1ull << g.q(0);
            for (uint64_t i = 0; i < dim; ++i) {
                if (i & m) continue;
                cplx a0 = amps[i], a1 = amps[i | m];
                amps[i] = (a0 + a1) * kInvSqrt2;
                amps[i | m] = (a0 - a1) * kInvSqrt2;
            }
            break;
        }
        case GateKind::T:
        case GateKind::TDG: {
            uint64_t m = 1ull << g.q(0);
            cplx ph = g.kind == GateKind::T ? kTPhase : kTdgPhase;
            for (uint64_t i = 0; i < dim; ++i)
                if (i & m) amps[i] *= ph;
            break;
        }
        default: {
            // reversible-classical: permute amplitudes through the table
            std::vector<cplx> next(dim, cplx{0.0, 0.0});
            int k = g.num_qubits();
            for (uint64_t i = 0; i < dim; ++i) {
                uint32_t bits = 0;
                for (int j = 0; j < k; ++j) bits |= static_cast<uint32_t>((i >> g.q(j)) & 1u) << j;
                uint32_t out = apply_classical_bits(g.kind, bits);
                uint64_t idx = i;
                for (int j = 0; j < k; ++j) {
                    uint64_t m = 1ull << g.q(j);
                    idx = ((out >> j) & 1u) ? (idx | m) : (idx & ~m);
                }
                next[idx] = amps[i];
            }
            amps.swap(next);
            break;
        }
    }
}

}  // namespace

Statevector simulate_statevector(const Circuit& c, const Statevector& in) {
    if (in.n_qubits != c.n_qubits() || in.amps.size() != (1ull << c.n_qubits()))
        throw Error(ErrorCode::DimensionMismatch, "statevector dimension mismatch");
    Statevector out = in;
    for (const Gate& g : c.gates()) apply_gate_dense(out.amps, g);
    return out;
}

SparseState SparseState::basis(uint32_t n_qubits, uint64_t index) {
    SparseState s;
    s.n_qubits = n_qubits;
    s.amps[index] = 1.0;
    return s;
}

cplx SparseState::amp(uint64_t index) const {
    auto it = amps.find(index);
    return it == amps.end() ? cplx{0.0, 0.0} : it->second;
}

double SparseState::norm() const {
    double n = 0;
    for (const auto& [k, a] : amps) n += std::norm(a);
    return std::sqrt(n);
}

SparseState simulate_sparse(const Circuit& c, SparseState state) {
    constexpr double kPrune = 1e-14;
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::T:
            case GateKind::TDG: {
                uint64_t m = 1ull << g.q(0);
                cplx ph = g.kind == GateKind::T ? kTPhase : kTdgPhase;
                for (auto& [k, a] : state.amps)
                    if (k & m) a *= ph;
                break;
            }
            case GateKind::H: {
                uint64_t m = 1ull << g.q(0);
                std::unordered_map<uint64_t, cplx> next;
                next.reserve(state.amps.size() * 2);
                for (const auto& [k, a] : state.amps) {
                    cplx v = a * kInvSqrt2;
                    next[k & ~m] += v;
                    next[k | m] += (k & m) ? -v : v;
                }
                state.amps.clear();
                for (auto& [k, a] : next)
                    if (std::norm(a) > kPrune * kPrune) state.amps.emplace(k, a);
                break;
            }
            default: {
                std::unordered_map<uint64_t, cplx> next;
                next.reserve(state.amps.size());
                int nq = g.num_qubits();
                for (const auto& [k, a] : state.amps) {
                    uint32_t bits = 0;
                    for (int j = 0; j < nq; ++j) bits |= static_cast<uint32_t>((k >> g.q(j)) & 1u) << j;
                    uint32_t out = apply_classical_bits(g.kind, bits);
                    uint64_t idx = k;
                    for (int j = 0; j < nq; ++j) {
                        uint64_t m = 1ull << g.q(j);
                        idx = ((out >> j) & 1u) ? (idx | m) : (idx & ~m);
                    }
                    next[idx] += a;
                }
                state.amps.swap(next);
                break;
            }
        }
    }
    return state;
}

UnitaryMatrix full_unitary(const Circuit& c) {
    if (c.n_qubits() > 12) throw Error(ErrorCode::TooLarge, "full_unitary capped at 12 qubits");
    const uint64_t dim = 1ull << c.n_qubits();
    UnitaryMatrix u;
    u.n_qubits = c.n_qubits();
    u.m.assign(dim * dim, cplx{0.0, 0.0});
    for (uint64_t col = 0; col < dim; ++col) {
        SparseState s = simulate_sparse(c, SparseState::basis(c.n_qubits(), col));
        for (const auto& [row, a] : s.amps) u.m[(row << c.n_qubits()) + col] = a;
    }
    return u;
}

UnitaryMatrix permutation_unitary(const PermutationTable& p) {
    UnitaryMatrix u;
    u.n_qubits = static_cast<uint32_t>(p.arity);
    const uint64_t dim = 1ull << p.arity;
    u.m.assign(dim * dim, cplx{0.0, 0.0});
    for (uint64_t col = 0; col < dim; ++col) u.m[(static_cast<uint64_t>(p.map[col]) << p.arity) + col] = 1.0;
    return u;
}

double max_deviation(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    if (a.n_qubits != b.n_qubits) throw Error(ErrorCode::DimensionMismatch, "unitary dimension mismatch");
    double worst = 0;
    for (size_t i = 0; i < a.m.size(); ++i) worst = std::max(worst, std::abs(a.m[i] - b.m[i]));
    return worst;
}

uint64_t CarryString::sum_value() const {
    uint64_t v = 0;
    for (size_t i = 0; i < s.size(); ++i) v |= static_cast<uint64_t>(s[i]) << i;
    return v;
}

CarryString classical_ripple_add(uint64_t a, uint64_t b, int n) {
    if (n < 1 || n > 62) throw Error(ErrorCode::OutOfRange, "bit width out of range");
    if (a >> n || b >> n) throw Error(ErrorCode::OutOfRange, "operand exceeds bit width");
    CarryString cs;
    cs.c.assign(static_cast<size_t>(n) + 1, 0);
    cs.s.assign(static_cast<size_t>(n) + 1, 0);
    for (int i = 1; i <= n; ++i) {
        uint8_t ai = (a >> (i - 1)) & 1u, bi = (b >> (i - 1)) & 1u, ci = cs.c[static_cast<size_t>(i) - 1];
        cs.c[static_cast<size_t>(i)] = static_cast<uint8_t>((ai & bi) ^ (bi & ci) ^ (ci & ai));
    }
    for (int i = 0; i < n; ++i)
        cs.s[static_cast<size_t>(i)] =
            static_cast<uint8_t>(((a >> i) & 1u) ^ ((b >> i) & 1u) ^ cs.c[static_cast<size_t>(i)]);
    cs.s[static_cast<size_t>(n)] = cs.c[static_cast<size_t>(n)];
    return cs;
}

}  // namespace rca
