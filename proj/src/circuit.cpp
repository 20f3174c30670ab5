#include "rca/circuit.hpp"

#include "rca/semantics.hpp"

#include <algorithm>

namespace rca {

const char* kind_name(GateKind k) {
    switch (k) {
        case GateKind::X: return "x";
        case GateKind::H: return "h";
        case GateKind::T: return "t";
        case GateKind::TDG: return "tdg";
        case GateKind::CNOT: return "cnot";
        case GateKind::TOFFOLI: return "toffoli";
        case GateKind::PERES: return "peres";
        case GateKind::TR: return "tr";
    }
    return "?";
}

GateKind kind_from_name(const std::string& name) {
    if (name == "x") return GateKind::X;
    if (name == "h") return GateKind::H;
    if (name == "t") return GateKind::T;
    if (name == "tdg") return GateKind::TDG;
    if (name == "cnot") return GateKind::CNOT;
    if (name == "toffoli") return GateKind::TOFFOLI;
    if (name == "peres") return GateKind::PERES;
    if (name == "tr") return GateKind::TR;
    throw Error(ErrorCode::SchemaError, "unknown gate kind \"" + name + "\"");
}

GateKind inverse_kind(GateKind k) {
    switch (k) {
        case GateKind::T: return GateKind::TDG;
        case GateKind::TDG: return GateKind::T;
        case GateKind::PERES: return GateKind::TR;
        case GateKind::TR: return GateKind::PERES;
        default: return k;  // X, H, CNOT, TOFFOLI are self-inverse
    }
}

std::string segment_tag_string(const Segment& s) {
    switch (s.tag) {
        case SegmentTag::Pre: return "pre";
        case SegmentTag::Apex: return "apex";
        case SegmentTag::Post: return "post";
        case SegmentTag::LeftCascade: return "left_cascade:" + std::to_string(s.layer);
        case SegmentTag::RightCascade: return "right_cascade:" + std::to_string(s.layer);
    }
    return "?";
}

Segment segment_from_tag_string(const std::string& tag, uint32_t from, uint32_t to) {
    Segment s;
    s.from = from;
    s.to = to;
    auto colon = tag.find(':');
    std::string base = tag.substr(0, colon);
    if (base == "pre") s.tag = SegmentTag::Pre;
    else if (base == "apex") s.tag = SegmentTag::Apex;
    else if (base == "post") s.tag = SegmentTag::Post;
    else if (base == "left_cascade") s.tag = SegmentTag::LeftCascade;
    else if (base == "right_cascade") s.tag = SegmentTag::RightCascade;
    else throw Error(ErrorCode::SchemaError, "unknown segment tag \"" + tag + "\"");
    if (colon != std::string::npos) s.layer = std::stoi(tag.substr(colon + 1));
    return s;
}

void Circuit::add_segment(SegmentTag tag, int layer, uint32_t from, uint32_t to) {
    if (from > to || to > gates_.size())
        throw Error(ErrorCode::SchemaError, "segment range out of bounds");
    if (!segments_.empty() && from < segments_.back().to)
        throw Error(ErrorCode::SchemaError, "segments must be disjoint and ordered");
    segments_.push_back(Segment{tag, layer, from, to});
}

std::vector<uint32_t> Circuit::wires_with_role(RoleTag tag) const {
    std::vector<std::pair<int, uint32_t>> found;
    for (uint32_t w = 0; w < roles_.size(); ++w)
        if (roles_[w].tag == tag) found.emplace_back(roles_[w].index, w);
    std::sort(found.begin(), found.end());
    std::vector<uint32_t> out;
    out.reserve(found.size());
    for (auto& [i, w] : found) out.push_back(w);
    return out;
}

void Circuit::validate() const {
    for (const auto& g : gates_) {
        for (int i = 0; i < g.num_qubits(); ++i) {
            if (g.q(i) >= n_qubits_) throw Error(ErrorCode::BadGate, "gate qubit out of range");
            for (int j = i + 1; j < g.num_qubits(); ++j)
                if (g.q(i) == g.q(j)) throw Error(ErrorCode::BadGate, "gate qubits must be distinct");
        }
    }
    if (!roles_.empty()) {
        if (roles_.size() != n_qubits_)
            throw Error(ErrorCode::RegisterMismatch, "role map size mismatch");
        // indices unique per role family
        for (auto tag : {RoleTag::A, RoleTag::B}) {
            auto wires = wires_with_role(tag);
            std::vector<int> idx;
            for (auto w : wires) idx.push_back(roles_[w].index);
            std::sort(idx.begin(), idx.end());
            if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
                throw Error(ErrorCode::RegisterMismatch, "duplicate role index");
        }
    }
    uint32_t prev_end = 0;
    for (const auto& s : segments_) {
        if (s.from < prev_end || s.to > gates_.size() || s.from > s.to)
            throw Error(ErrorCode::SchemaError, "segment ranges must be ordered and in bounds");
        prev_end = s.to;
    }
}

Circuit concat(const Circuit& c1, const Circuit& c2) {
    if (c1.n_qubits() != c2.n_qubits())
        throw Error(ErrorCode::RegisterMismatch, "concat requires equal qubit counts");
    if (!c1.roles().empty() && !c2.roles().empty() && !(c1.roles() == c2.roles()))
        throw Error(ErrorCode::RegisterMismatch, "concat requires compatible role maps");
    Circuit out(c1.n_qubits());
    out.set_roles(c1.roles().empty() ? c2.roles() : c1.roles());
    for (const auto& g : c1.gates()) out.add(g);
    for (const auto& g : c2.gates()) out.add(g);
    auto offset = static_cast<uint32_t>(c1.size());
    for (const auto& s : c1.segments()) out.add_segment(s.tag, s.layer, s.from, s.to);
    for (const auto& s : c2.segments()) out.add_segment(s.tag, s.layer, s.from + offset, s.to + offset);
    return out;
}

namespace {

// The PERES <-> TR swap is only sound if their truth tables really are
// mutual inverses; checked once against the semantics module.
bool composite_inverses_verified() {
    static const bool ok = [] {
        auto p = gate_permutation(GateKind::PERES);
        auto r = gate_permutation(GateKind::TR);
        return compose(p, r) == identity_permutation(3) &&
               compose(r, p) == identity_permutation(3);
    }();
    return ok;
}

}  // namespace

Circuit reverse(const Circuit& c) {
    Circuit out(c.n_qubits());
    out.set_roles(c.roles());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        Gate g = *it;
        if (is_composite(g.kind) && !composite_inverses_verified())
            throw Error(ErrorCode::NonInvertibleComposite, "composite inverse pair failed its check");
        g.kind = inverse_kind(g.kind);
        out.add(g);
    }
    return out;
}

}  // namespace rca
