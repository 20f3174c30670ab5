#pragma once

#include "rca/circuit.hpp"
#include "rca/metrics.hpp"

#include <functional>
#include <vector>

namespace rca {

enum class CompileMode { Naive, Optimized };

CompileMode compile_mode_from_name(const std::string& name);
const char* compile_mode_name(CompileMode m);

/// Clifford+T replacement templates. Each emitter appends its gate list for
/// the composite on wires (q1,q2,q3). All templates are checked against the
/// composite's permutation unitary at registration (verify_templates).
namespace templates {

/// T-depth-3 Toffoli with 7 CNOTs.
void toffoli_tdepth3(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// Same Toffoli with its trailing T moved past the final control-side CNOT
/// (a diagonal gate commutes through a control), so the T on q1 ends the
/// list. Cascade stitching relies on this ordering for pair cancellation.
void toffoli_left(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// Adjoint-reverse of toffoli_left; used for uncomputing branches.
void toffoli_right(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// CNOT-minimal Toffoli (6 CNOTs, T-depth 4); registered for completeness.
void toffoli_cnot6(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// Peres as Toffoli followed by CNOT(q1,q2) with the adjacent CNOT pair
/// cancelled: 6 CNOTs, T-depth 3. This is the per-gate (naive) Peres.
void peres_merged(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// Peres with 5 CNOTs but T-depth 4; used by stitched right cascades.
void peres_cnot5(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// TR as the adjoint-reverse of peres_merged (6 CNOTs, T-depth 3).
void tr_merged(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

/// TR as the adjoint-reverse of peres_cnot5 (5 CNOTs, T-depth 4).
void tr_cnot5(Circuit& c, uint32_t q1, uint32_t q2, uint32_t q3);

}  // namespace templates

/// Checks every registered template against its composite's permutation
/// unitary, entry-wise within 1e-9 and with no global-phase slack.
/// Returns the worst deviation observed.
double verify_templates();

struct CompileResult {
    Circuit circuit;
    CompileMode mode = CompileMode::Naive;
    bool fell_back_to_naive = false;
};

/// Lowers TOFFOLI/PERES/TR to {X,H,T,TDG,CNOT}. Naive mode substitutes each
/// composite independently. Optimized mode picks stitched templates from the
/// segment annotations (left cascades, right cascades, apex) and runs
/// cancel_pairs afterwards; without segments it falls back to naive and sets
/// the warning flag.
CompileResult compile(const Circuit& c, CompileMode mode);

/// Removes DAG-adjacent inverse pairs (T/TDG, H/H, X/X, identical CNOTs)
/// until fixpoint. Two gates form a pair when the second is the immediate
/// successor of the first on every wire they touch.
Circuit cancel_pairs(const Circuit& c);

enum class CascadeShape { ToffoliLeft, PeresRight, VToffPeres, VToffToff };

CascadeShape cascade_shape_from_name(const std::string& name);

/// Closed-form metric predictions for the stitched cascades, before and
/// after pair cancellation. Counts are exact; depths upper-bound the
/// measured DAG depth.
struct CascadePrediction {
    MetricReport pre;
    MetricReport post;
};

CascadePrediction cascade_metrics_formula(CascadeShape shape, int layers);

/// High-level cascade circuit for a shape: layer i of a left cascade sits on
/// wires (2i-2, 2i-1, 2i); V shapes mirror the same triples on the way down.
Circuit build_cascade(CascadeShape shape, int layers);

}  // namespace rca
