#include "rca/builders.hpp"

#include "rca/semantics.hpp"

namespace rca {

Family family_from_name(const std::string& name) {
    if (name == "cdkm-shallow") return Family::CdkmShallow;
    if (name == "cdkm-compact") return Family::CdkmCompact;
    if (name == "ttk-adder") return Family::TtkAdder;
    if (name == "cdkm-comparator") return Family::CdkmComparator;
    if (name == "ttk-comparator") return Family::TtkComparator;
    throw Error(ErrorCode::SchemaError, "unknown family \"" + name + "\"");
}

const char* family_name(Family f) {
    switch (f) {
        case Family::CdkmShallow: return "cdkm-shallow";
        case Family::CdkmCompact: return "cdkm-compact";
        case Family::TtkAdder: return "ttk-adder";
        case Family::CdkmComparator: return "cdkm-comparator";
        case Family::TtkComparator: return "ttk-comparator";
    }
    return "?";
}

bool family_is_comparator(Family f) {
    return f == Family::CdkmComparator || f == Family::TtkComparator;
}

uint32_t family_wires(Family f, int n) {
    bool ttk = f == Family::TtkAdder || f == Family::TtkComparator;
    return static_cast<uint32_t>(ttk ? 2 * n + 1 : 2 * n + 2);
}

namespace {

void require_n(int n) {
    if (n < 1) throw Error(ErrorCode::NTooSmall, "operand width must be at least 1");
}

/// CDKM wire layout: b0, a0, ancilla, b1, a1, ..., b_{n-1}, a_{n-1}, z.
struct CdkmWires {
    int n;
    uint32_t b(int i) const { return i == 0 ? 0u : static_cast<uint32_t>(2 * i + 1); }
    uint32_t a(int i) const { return i == 0 ? 1u : static_cast<uint32_t>(2 * i + 2); }
    uint32_t anc() const { return 2; }
    uint32_t z() const { return static_cast<uint32_t>(2 * n + 1); }
    /// Wire carrying the k-th carry offset a_k ^ c_k after the k-th Toffoli.
    uint32_t cw(int k) const { return k == 1 ? anc() : a(k - 1); }

    std::vector<QubitRole> roles() const {
        std::vector<QubitRole> r(static_cast<size_t>(2 * n + 2));
        for (int i = 0; i < n; ++i) {
            r[b(i)] = {RoleTag::B, i};
            r[a(i)] = {RoleTag::A, i};
        }
        r[anc()] = {RoleTag::Ancilla, -1};
        r[z()] = {RoleTag::Z, -1};
        return r;
    }
};

/// TTK wire layout: a0, b0, a1, b1, ..., a_{n-1}, b_{n-1}, z (no ancilla).
struct TtkWires {
    int n;
    uint32_t a(int i) const { return static_cast<uint32_t>(2 * i); }
    uint32_t b(int i) const { return static_cast<uint32_t>(2 * i + 1); }
    uint32_t z() const { return static_cast<uint32_t>(2 * n); }

    std::vector<QubitRole> roles() const {
        std::vector<QubitRole> r(static_cast<size_t>(2 * n + 1));
        for (int i = 0; i < n; ++i) {
            r[a(i)] = {RoleTag::A, i};
            r[b(i)] = {RoleTag::B, i};
        }
        r[z()] = {RoleTag::Z, -1};
        return r;
    }
};

}  // namespace

Circuit build_cdkm_shallow(int n) {
    require_n(n);
    CdkmWires w{n};
    Circuit c(family_wires(Family::CdkmShallow, n));
    c.set_roles(w.roles());
    if (n == 1) {
        c.open_segment(SegmentTag::Apex);
        c.add(peres(w.a(0), w.b(0), w.z()));
        c.close_segment();
        return c;
    }
    c.open_segment(SegmentTag::Pre);
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(cnot(w.a(1), w.anc()));
    c.close_segment();

    for (int k = 1; k <= n - 1; ++k) {
        c.open_segment(SegmentTag::LeftCascade, k);
        if (k == 1) c.add(toffoli(w.b(0), w.a(0), w.anc()));
        else c.add(toffoli(w.cw(k - 1), w.b(k - 1), w.cw(k)));
        if (k <= n - 2) c.add(cnot(w.a(k + 1), w.a(k)));
        else c.add(cnot(w.a(n - 1), w.z()));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Apex);
    c.add(peres(w.cw(n - 1), w.b(n - 1), w.z()));
    c.close_segment();

    for (int k = n - 1; k >= 1; --k) {
        c.open_segment(SegmentTag::RightCascade, k);
        if (k == 1) c.add(peres(w.a(0), w.b(0), w.anc()));
        else c.add(peres(w.cw(k - 1), w.b(k - 1), w.cw(k)));
        if (k <= n - 2) c.add(cnot(w.a(k + 1), w.a(k)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Post);
    c.add(cnot(w.a(1), w.anc()));
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.close_segment();
    return c;
}

Circuit build_cdkm_compact(int n) {
    require_n(n);
    CdkmWires w{n};
    Circuit c(family_wires(Family::CdkmCompact, n));
    c.set_roles(w.roles());
    if (n == 1) {
        c.open_segment(SegmentTag::Apex);
        c.add(peres(w.a(0), w.b(0), w.z()));
        c.close_segment();
        return c;
    }
    c.open_segment(SegmentTag::Pre);
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(cnot(w.a(1), w.anc()));
    c.close_segment();

    for (int k = 1; k <= n - 1; ++k) {
        c.open_segment(SegmentTag::LeftCascade, k);
        if (k == 1) c.add(toffoli(w.b(0), w.a(0), w.anc()));
        else c.add(toffoli(w.cw(k - 1), w.b(k - 1), w.cw(k)));
        if (k <= n - 2) c.add(cnot(w.a(k + 1), w.a(k)));
        else c.add(cnot(w.a(n - 1), w.z()));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Apex);
    c.add(peres(w.cw(n - 1), w.b(n - 1), w.z()));
    c.close_segment();

    // Right branch: Toffolis interspersed with two CNOTs per layer. The
    // first CNOT moves the clean carry below, the second writes the sum bit.
    c.open_segment(SegmentTag::RightCascade, n - 1);
    if (n == 2) c.add(toffoli(w.b(0), w.a(0), w.anc()));
    else c.add(toffoli(w.cw(n - 2), w.b(n - 2), w.cw(n - 1)));
    c.add(cnot(w.a(n - 1), w.b(n - 1)));
    c.add(cnot(w.a(n - 1), w.cw(n - 1)));
    c.close_segment();
    for (int k = n - 1; k >= 2; --k) {
        c.open_segment(SegmentTag::RightCascade, k - 1);
        c.add(cnot(w.cw(k), w.cw(k - 1)));
        c.add(cnot(w.cw(k - 1), w.b(k - 1)));
        if (k - 1 == 1) c.add(toffoli(w.b(0), w.a(0), w.anc()));
        else c.add(toffoli(w.cw(k - 2), w.b(k - 2), w.cw(k - 1)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Post);
    c.add(cnot(w.a(0), w.b(0)));
    c.close_segment();
    return c;
}

Circuit build_ttk_adder(int n) {
    require_n(n);
    TtkWires w{n};
    Circuit c(family_wires(Family::TtkAdder, n));
    c.set_roles(w.roles());
    if (n == 1) {
        c.open_segment(SegmentTag::Apex);
        c.add(peres(w.a(0), w.b(0), w.z()));
        c.close_segment();
        return c;
    }
    c.open_segment(SegmentTag::Pre);
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(cnot(w.a(n - 1), w.z()));
    for (int i = n - 2; i >= 1; --i) c.add(cnot(w.a(i), w.a(i + 1)));
    c.close_segment();

    for (int k = 1; k <= n - 1; ++k) {
        c.open_segment(SegmentTag::LeftCascade, k);
        c.add(toffoli(w.a(k - 1), w.b(k - 1), w.a(k)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Apex);
    c.add(peres(w.a(n - 1), w.b(n - 1), w.z()));
    c.close_segment();

    for (int k = n - 1; k >= 1; --k) {
        c.open_segment(SegmentTag::RightCascade, k);
        c.add(peres(w.a(k - 1), w.b(k - 1), w.a(k)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Post);
    for (int i = 1; i <= n - 2; ++i) c.add(cnot(w.a(i), w.a(i + 1)));
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.close_segment();
    return c;
}

Circuit build_cdkm_comparator(int n) {
    require_n(n);
    CdkmWires w{n};
    Circuit c(family_wires(Family::CdkmComparator, n));
    c.set_roles(w.roles());
    if (n == 1) {
        c.open_segment(SegmentTag::Apex);
        c.add(x(w.b(0)));
        c.add(toffoli(w.a(0), w.b(0), w.z()));
        c.add(x(w.b(0)));
        c.add(x(w.z()));
        c.close_segment();
        return c;
    }
    c.open_segment(SegmentTag::Pre);
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(x(w.b(0)));
    c.add(cnot(w.a(1), w.anc()));
    c.close_segment();

    for (int k = 1; k <= n - 1; ++k) {
        c.open_segment(SegmentTag::LeftCascade, k);
        if (k == 1) c.add(toffoli(w.b(0), w.a(0), w.anc()));
        else c.add(toffoli(w.cw(k - 1), w.b(k - 1), w.cw(k)));
        c.add(x(w.b(k)));
        if (k <= n - 2) c.add(cnot(w.a(k + 1), w.a(k)));
        else c.add(cnot(w.a(n - 1), w.z()));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Apex);
    c.add(toffoli(w.cw(n - 1), w.b(n - 1), w.z()));
    c.close_segment();

    for (int k = n - 1; k >= 1; --k) {
        c.open_segment(SegmentTag::RightCascade, k);
        if (k == 1) c.add(toffoli(w.b(0), w.a(0), w.anc()));
        else c.add(toffoli(w.cw(k - 1), w.b(k - 1), w.cw(k)));
        c.add(x(w.b(k)));
        if (k <= n - 2) c.add(cnot(w.a(k + 1), w.a(k)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Post);
    c.add(x(w.b(0)));
    c.add(cnot(w.a(1), w.anc()));
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(x(w.z()));
    c.close_segment();
    return c;
}

Circuit build_ttk_comparator(int n) {
    require_n(n);
    TtkWires w{n};
    Circuit c(family_wires(Family::TtkComparator, n));
    c.set_roles(w.roles());
    if (n == 1) {
        c.open_segment(SegmentTag::Apex);
        c.add(tr(w.a(0), w.b(0), w.z()));
        c.add(cnot(w.a(0), w.b(0)));
        c.add(x(w.z()));
        c.close_segment();
        return c;
    }
    c.open_segment(SegmentTag::Pre);
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(cnot(w.a(n - 1), w.z()));
    for (int i = n - 2; i >= 1; --i) c.add(cnot(w.a(i), w.a(i + 1)));
    c.add(x(w.b(0)));
    c.close_segment();

    for (int k = 1; k <= n - 1; ++k) {
        c.open_segment(SegmentTag::LeftCascade, k);
        c.add(toffoli(w.a(k - 1), w.b(k - 1), w.a(k)));
        if (k <= n - 2) c.add(x(w.b(k)));
        c.close_segment();
    }

    // The TR supplies the negated-control product for the top bit; the CNOT
    // undoes its q2 write-back so the b register survives.
    c.open_segment(SegmentTag::Apex);
    c.add(tr(w.a(n - 1), w.b(n - 1), w.z()));
    c.add(cnot(w.a(n - 1), w.b(n - 1)));
    c.close_segment();

    for (int k = n - 1; k >= 1; --k) {
        c.open_segment(SegmentTag::RightCascade, k);
        c.add(toffoli(w.a(k - 1), w.b(k - 1), w.a(k)));
        if (k - 1 >= 1) c.add(x(w.b(k - 1)));
        c.close_segment();
    }

    c.open_segment(SegmentTag::Post);
    c.add(x(w.b(0)));
    for (int i = 1; i <= n - 2; ++i) c.add(cnot(w.a(i), w.a(i + 1)));
    for (int i = 1; i < n; ++i) c.add(cnot(w.a(i), w.b(i)));
    c.add(x(w.z()));
    c.close_segment();
    return c;
}

Circuit build(Family f, int n) {
    switch (f) {
        case Family::CdkmShallow: return build_cdkm_shallow(n);
        case Family::CdkmCompact: return build_cdkm_compact(n);
        case Family::TtkAdder: return build_ttk_adder(n);
        case Family::CdkmComparator: return build_cdkm_comparator(n);
        case Family::TtkComparator: return build_ttk_comparator(n);
    }
    throw Error(ErrorCode::SchemaError, "unknown family");
}

uint64_t pack_registers(const Circuit& c, uint64_t a, uint64_t b, int z) {
    uint64_t basis = 0;
    const auto& roles = c.roles();
    for (uint32_t wire = 0; wire < roles.size(); ++wire) {
        const QubitRole& r = roles[wire];
        uint64_t bit = 0;
        if (r.tag == RoleTag::A) bit = (a >> r.index) & 1u;
        else if (r.tag == RoleTag::B) bit = (b >> r.index) & 1u;
        else if (r.tag == RoleTag::Z) bit = static_cast<uint64_t>(z & 1);
        basis |= bit << wire;
    }
    return basis;
}

Registers unpack_registers(const Circuit& c, uint64_t basis) {
    Registers out;
    const auto& roles = c.roles();
    int anc_pos = 0;
    for (uint32_t wire = 0; wire < roles.size(); ++wire) {
        uint64_t bit = (basis >> wire) & 1u;
        const QubitRole& r = roles[wire];
        switch (r.tag) {
            case RoleTag::A: out.a |= bit << r.index; break;
            case RoleTag::B: out.b |= bit << r.index; break;
            case RoleTag::Z: out.z = static_cast<int>(bit); break;
            case RoleTag::Ancilla: out.ancilla |= bit << anc_pos++; break;
        }
    }
    return out;
}

uint64_t oracle_output(Family f, int n, const Circuit& c, uint64_t a, uint64_t b, int z) {
    if (family_is_comparator(f)) {
        int zo = z ^ compare_le(a, b);
        return pack_registers(c, a, b, zo);
    }
    CarryString cs = classical_ripple_add(a, b, n);
    uint64_t sum = cs.sum_value();
    uint64_t b_out = sum & ((1ull << n) - 1);
    int zo = z ^ static_cast<int>((sum >> n) & 1u);
    return pack_registers(c, a, b_out, zo);
}

}  // namespace rca
