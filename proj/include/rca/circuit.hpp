#pragma once

#include "rca/gates.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rca {

/// Role of a wire inside a register layout. A(i)/B(i) carry the i-th bits of
/// the two operands; Z is the carry-out / comparison wire.
enum class RoleTag : uint8_t { A, B, Ancilla, Z };

struct QubitRole {
    RoleTag tag = RoleTag::Ancilla;
    int index = -1;  // meaningful for A/B only

    bool operator==(const QubitRole& o) const { return tag == o.tag && index == o.index; }
};

enum class SegmentTag : uint8_t { Pre, LeftCascade, Apex, RightCascade, Post };

/// Structural annotation over a contiguous gate-index range [from, to).
/// Advisory: metric and semantic operations never require segments.
struct Segment {
    SegmentTag tag = SegmentTag::Pre;
    int layer = -1;  // cascade layer, -1 when not applicable
    uint32_t from = 0;
    uint32_t to = 0;
};

std::string segment_tag_string(const Segment& s);
Segment segment_from_tag_string(const std::string& tag, uint32_t from, uint32_t to);

/// Ordered gate sequence over a fixed register. Storage order is execution
/// order and is a valid topological order of the dependency DAG.
class Circuit {
public:
    Circuit() = default;
    explicit Circuit(uint32_t n_qubits) : n_qubits_(n_qubits) {}

    uint32_t n_qubits() const { return n_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<QubitRole>& roles() const { return roles_; }
    const std::vector<Segment>& segments() const { return segments_; }

    bool empty() const { return gates_.empty(); }
    size_t size() const { return gates_.size(); }
    const Gate& gate(size_t i) const { return gates_.at(i); }

    void add(const Gate& g) {
        for (int i = 0; i < g.num_qubits(); ++i)
            if (g.q(i) >= n_qubits_)
                throw Error(ErrorCode::BadGate, "gate qubit index out of range");
        gates_.push_back(g);
    }

    void set_roles(std::vector<QubitRole> roles) {
        if (!roles.empty() && roles.size() != n_qubits_)
            throw Error(ErrorCode::RegisterMismatch, "role map size must equal qubit count");
        roles_ = std::move(roles);
    }

    void add_segment(SegmentTag tag, int layer, uint32_t from, uint32_t to);

    /// Opens a segment at the current gate count; close_segment records it
    /// if at least one gate was emitted in between.
    void open_segment(SegmentTag tag, int layer = -1) {
        pending_tag_ = tag;
        pending_layer_ = layer;
        pending_from_ = static_cast<uint32_t>(gates_.size());
    }
    void close_segment() {
        auto to = static_cast<uint32_t>(gates_.size());
        if (pending_from_ < to) add_segment(pending_tag_, pending_layer_, pending_from_, to);
        pending_from_ = to;
    }

    bool has_composites() const {
        for (const auto& g : gates_)
            if (is_composite(g.kind)) return true;
        return false;
    }

    bool is_clifford_t() const { return !has_composites(); }

    bool is_classical() const {
        for (const auto& g : gates_)
            if (!rca::is_classical(g.kind)) return false;
        return true;
    }

    /// Wires holding a given role, ordered by role index.
    std::vector<uint32_t> wires_with_role(RoleTag tag) const;

    /// Validates structural invariants; throws on violation.
    void validate() const;

private:
    uint32_t n_qubits_ = 0;
    std::vector<QubitRole> roles_;
    std::vector<Gate> gates_;
    std::vector<Segment> segments_;

    SegmentTag pending_tag_ = SegmentTag::Pre;
    int pending_layer_ = -1;
    uint32_t pending_from_ = 0;
};

/// c1 followed by c2 on the same register. Throws RegisterMismatch when the
/// qubit counts or role maps differ. Segment annotations carry over with the
/// gate-index offset applied to c2's.
Circuit concat(const Circuit& c1, const Circuit& c2);

/// Reversed circuit: gates in reverse order, each replaced by its inverse.
/// Segment annotations are dropped (they describe the forward structure).
Circuit reverse(const Circuit& c);

}  // namespace rca
