#include "rca/compile.hpp"

#include <algorithm>

namespace rca {

CompileMode compile_mode_from_name(const std::string& name) {
    if (name == "naive") return CompileMode::Naive;
    if (name == "optimized") return CompileMode::Optimized;
    throw Error(ErrorCode::SchemaError, "unknown compile mode \"" + name + "\"");
}

const char* compile_mode_name(CompileMode m) {
    return m == CompileMode::Naive ? "naive" : "optimized";
}

namespace {

void emit_naive(Circuit& out, const Gate& g) {
    switch (g.kind) {
        case GateKind::TOFFOLI: templates::toffoli_tdepth3(out, g.q(0), g.q(1), g.q(2)); break;
        case GateKind::PERES: templates::peres_merged(out, g.q(0), g.q(1), g.q(2)); break;
        case GateKind::TR: templates::tr_merged(out, g.q(0), g.q(1), g.q(2)); break;
        default: out.add(g); break;
    }
}

void emit_optimized(Circuit& out, const Gate& g, SegmentTag tag, bool has_descent) {
    switch (g.kind) {
        case GateKind::TOFFOLI:
            // The rearranged tail pays off only when a cancelling partner
            // follows (an apex or a mirrored branch); a bare left cascade
            // keeps the plain template and its parallel tail Ts.
            if (tag == SegmentTag::LeftCascade && has_descent)
                templates::toffoli_left(out, g.q(0), g.q(1), g.q(2));
            else if (tag == SegmentTag::RightCascade) templates::toffoli_right(out, g.q(0), g.q(1), g.q(2));
            else templates::toffoli_tdepth3(out, g.q(0), g.q(1), g.q(2));
            break;
        case GateKind::PERES:
            // stitched cascades and the apex both use the 5-CNOT Peres; its
            // leading T on q1 cancels against a left-cascade tail.
            templates::peres_cnot5(out, g.q(0), g.q(1), g.q(2));
            break;
        case GateKind::TR: templates::tr_cnot5(out, g.q(0), g.q(1), g.q(2)); break;
        default: out.add(g); break;
    }
}

}  // namespace

CompileResult compile(const Circuit& c, CompileMode mode) {
    c.validate();
    CompileResult res;
    res.mode = mode;

    bool optimized = mode == CompileMode::Optimized;
    if (optimized && c.segments().empty() && c.has_composites()) {
        optimized = false;
        res.fell_back_to_naive = true;
    }

    Circuit out(c.n_qubits());
    out.set_roles(c.roles());

    if (!optimized) {
        for (const Gate& g : c.gates()) emit_naive(out, g);
        res.circuit = std::move(out);
        return res;
    }

    // segment tag per gate index; untagged gates compile as naive
    std::vector<SegmentTag> tag(c.size(), SegmentTag::Pre);
    std::vector<bool> tagged(c.size(), false);
    bool has_descent = false;
    for (const Segment& s : c.segments()) {
        if (s.tag == SegmentTag::Apex || s.tag == SegmentTag::RightCascade) has_descent = true;
        for (uint32_t i = s.from; i < s.to; ++i) {
            tag[i] = s.tag;
            tagged[i] = true;
        }
    }
    for (size_t i = 0; i < c.size(); ++i) {
        const Gate& g = c.gate(i);
        if (tagged[i]) emit_optimized(out, g, tag[i], has_descent);
        else emit_naive(out, g);
    }
    res.circuit = cancel_pairs(out);
    return res;
}

namespace {

bool inverse_pair(const Gate& a, const Gate& b) {
    switch (a.kind) {
        case GateKind::T: return b.kind == GateKind::TDG && a.q(0) == b.q(0);
        case GateKind::TDG: return b.kind == GateKind::T && a.q(0) == b.q(0);
        case GateKind::H: return b.kind == GateKind::H && a.q(0) == b.q(0);
        case GateKind::X: return b.kind == GateKind::X && a.q(0) == b.q(0);
        case GateKind::CNOT:
            return b.kind == GateKind::CNOT && a.q(0) == b.q(0) && a.q(1) == b.q(1);
        default: return false;
    }
}

}  // namespace

Circuit cancel_pairs(const Circuit& c) {
    std::vector<Gate> gates = c.gates();
    std::vector<bool> dead(gates.size(), false);

    bool changed = true;
    while (changed) {
        changed = false;
        // next live gate on each wire, scanned front to back
        std::vector<int64_t> last(c.n_qubits(), -1);
        for (size_t i = 0; i < gates.size(); ++i) {
            if (dead[i]) continue;
            const Gate& g = gates[i];
            // candidate predecessor: the previous live gate on every wire of g
            int64_t cand = -2;
            bool uniform = true;
            for (int k = 0; k < g.num_qubits() && uniform; ++k) {
                int64_t p = last[g.q(k)];
                if (cand == -2) cand = p;
                else if (cand != p) uniform = false;
            }
            if (uniform && cand >= 0 && !dead[static_cast<size_t>(cand)]) {
                const Gate& p = gates[static_cast<size_t>(cand)];
                if (p.num_qubits() == g.num_qubits() && inverse_pair(p, g)) {
                    dead[static_cast<size_t>(cand)] = true;
                    dead[i] = true;
                    // rewind wire frontiers past the removed predecessor
                    for (int k = 0; k < g.num_qubits(); ++k) {
                        int64_t w = -1;
                        for (int64_t j = cand - 1; j >= 0; --j) {
                            if (dead[static_cast<size_t>(j)]) continue;
                            const Gate& gj = gates[static_cast<size_t>(j)];
                            bool touches = false;
                            for (int m = 0; m < gj.num_qubits(); ++m)
                                if (gj.q(m) == g.q(k)) touches = true;
                            if (touches) {
                                w = j;
                                break;
                            }
                        }
                        last[g.q(k)] = w;
                    }
                    changed = true;
                    continue;
                }
            }
            for (int k = 0; k < g.num_qubits(); ++k) last[g.q(k)] = static_cast<int64_t>(i);
        }
    }

    Circuit out(c.n_qubits());
    out.set_roles(c.roles());
    for (size_t i = 0; i < gates.size(); ++i)
        if (!dead[i]) out.add(gates[i]);
    return out;
}

CascadeShape cascade_shape_from_name(const std::string& name) {
    if (name == "toffoli-left") return CascadeShape::ToffoliLeft;
    if (name == "peres-right") return CascadeShape::PeresRight;
    if (name == "v-toff-peres") return CascadeShape::VToffPeres;
    if (name == "v-toff-toff") return CascadeShape::VToffToff;
    throw Error(ErrorCode::SchemaError, "unknown cascade shape \"" + name + "\"");
}

CascadePrediction cascade_metrics_formula(CascadeShape shape, int layers) {
    if (layers < 1) throw Error(ErrorCode::OutOfRange, "cascade needs at least one layer");
    auto k = static_cast<uint64_t>(layers);
    CascadePrediction p;
    auto fill = [](uint64_t td, uint64_t tc, uint64_t cd, uint64_t cc) {
        MetricReport m;
        m.t_depth = td;
        m.t_count = tc;
        m.cnot_depth = cd;
        m.cnot_count = cc;
        return m;
    };
    switch (shape) {
        case CascadeShape::ToffoliLeft:
            p.pre = fill(2 * k + 1, 7 * k, 4 * k + 3, 7 * k);
            p.post = p.pre;
            break;
        case CascadeShape::PeresRight:
            p.pre = fill(k + 3, 7 * k, 4 * k + 1, 5 * k);
            p.post = p.pre;
            break;
        case CascadeShape::VToffPeres:
            p.pre = fill(3 * k + 4, 14 * k, 8 * k + 4, 12 * k);
            p.post = fill(3 * k + 4, 12 * k, 8 * k + 4, 12 * k);
            break;
        case CascadeShape::VToffToff:
            p.pre = fill(4 * k + 2, 14 * k, 8 * k + 6, 14 * k);
            p.post = fill(4 * k, 10 * k, 8 * k + 2, 10 * k);
            break;
    }
    return p;
}

Circuit build_cascade(CascadeShape shape, int layers) {
    if (layers < 1) throw Error(ErrorCode::OutOfRange, "cascade needs at least one layer");
    auto k = static_cast<uint32_t>(layers);
    Circuit c(2 * k + 1);
    auto triple = [](uint32_t i) {  // layer i in [1, k]
        return std::array<uint32_t, 3>{2 * (i - 1), 2 * i - 1, 2 * i};
    };
    bool v_shape = shape == CascadeShape::VToffPeres || shape == CascadeShape::VToffToff;
    if (shape != CascadeShape::PeresRight) {
        for (uint32_t i = 1; i <= k; ++i) {
            auto w = triple(i);
            c.open_segment(SegmentTag::LeftCascade, static_cast<int>(i));
            c.add(toffoli(w[0], w[1], w[2]));
            c.close_segment();
        }
    }
    if (v_shape) {
        // stand-in for an apex operator on the top carry wire;
        // an X costs nothing in any tracked metric but keeps the branches
        // from annihilating each other entirely
        c.open_segment(SegmentTag::Apex);
        c.add(x(2 * k));
        c.close_segment();
    }
    if (shape != CascadeShape::ToffoliLeft) {
        for (uint32_t i = k; i >= 1; --i) {
            auto w = triple(i);
            c.open_segment(SegmentTag::RightCascade, static_cast<int>(i));
            if (shape == CascadeShape::VToffToff) c.add(toffoli(w[0], w[1], w[2]));
            else c.add(peres(w[0], w[1], w[2]));
            c.close_segment();
        }
    }
    return c;
}

}  // namespace rca
