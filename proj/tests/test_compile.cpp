#include "rca/builders.hpp"
#include "rca/compile.hpp"
#include "rca/metrics.hpp"
#include "rca/semantics.hpp"

#include <doctest.h>

#include <random>

using namespace rca;

namespace {

Circuit random_cliffordt(std::mt19937_64& rng, uint32_t n_qubits, int n_gates) {
    Circuit c(n_qubits);
    for (int i = 0; i < n_gates; ++i) {
        uint32_t a = rng() % n_qubits;
        switch (rng() % 5) {
            case 0: c.add(x(a)); break;
            case 1: c.add(h(a)); break;
            case 2: c.add(t(a)); break;
            case 3: c.add(tdg(a)); break;
            default: {
                uint32_t b = rng() % n_qubits;
                while (b == a) b = rng() % n_qubits;
                c.add(cnot(a, b));
            }
        }
    }
    return c;
}

}  // namespace

TEST_CASE("naive compilation of a single Toffoli") {
    Circuit c(3);
    c.add(toffoli(0, 1, 2));
    MetricReport m = metrics(compile(c, CompileMode::Naive).circuit);
    CHECK(m.t_count == 7);
    CHECK(m.cnot_count == 7);
    CHECK(m.t_depth == 3);
}

TEST_CASE("optimized cascades reproduce the figure metrics at two layers") {
    MetricReport left =
        metrics(compile(build_cascade(CascadeShape::ToffoliLeft, 2), CompileMode::Optimized).circuit);
    CHECK(left.t_depth == 5);
    CHECK(left.t_count == 14);
    CHECK(left.cnot_depth == 11);
    CHECK(left.cnot_count == 14);

    MetricReport right =
        metrics(compile(build_cascade(CascadeShape::PeresRight, 2), CompileMode::Optimized).circuit);
    CHECK(right.t_depth == 5);
    CHECK(right.t_count == 14);
    CHECK(right.cnot_depth == 9);
    CHECK(right.cnot_count == 10);
}

TEST_CASE("optimized shallow adder at n = 6") {
    MetricReport m = metrics(compile(build_cdkm_shallow(6), CompileMode::Optimized).circuit);
    CHECK(m.t_count == 67);
    CHECK(m.cnot_count == 86);
    CHECK(m.t_depth <= 20);
    CHECK(m.cnot_depth <= 50);
}

TEST_CASE("cancel_pairs on the defining adjacency cases") {
    Circuit a(1);
    a.add(t(0));
    a.add(tdg(0));
    CHECK(cancel_pairs(a).empty());

    Circuit b(3);
    b.add(t(0));
    b.add(cnot(1, 2));
    b.add(tdg(0));
    Circuit rb = cancel_pairs(b);
    REQUIRE(rb.size() == 1);
    CHECK(rb.gate(0) == cnot(1, 2));

    Circuit c(2);
    c.add(t(0));
    c.add(cnot(0, 1));
    c.add(tdg(0));
    CHECK(cancel_pairs(c).gates() == c.gates());  // the CNOT blocks the pair
}

TEST_CASE("cancel_pairs chains through freshly exposed pairs") {
    // a tail followed by its adjoint-reverse must vanish completely
    Circuit c(2);
    c.add(cnot(0, 1));
    c.add(t(1));
    c.add(cnot(0, 1));
    c.add(tdg(0));
    c.add(t(0));
    c.add(cnot(0, 1));
    c.add(tdg(1));
    c.add(cnot(0, 1));
    CHECK(cancel_pairs(c).empty());
}

TEST_CASE("cancel_pairs preserves unitaries and never raises a metric") {
    std::mt19937_64 rng(0xC0FFEE);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c = random_cliffordt(rng, 2 + rng() % 5, 10 + static_cast<int>(rng() % 31));
        Circuit reduced = cancel_pairs(c);
        CHECK(max_deviation(full_unitary(c), full_unitary(reduced)) < 1e-10);
        MetricReport before = metrics(c), after = metrics(reduced);
        CHECK(after.t_count <= before.t_count);
        CHECK(after.t_depth <= before.t_depth);
        CHECK(after.cnot_count <= before.cnot_count);
        CHECK(after.cnot_depth <= before.cnot_depth);
        CHECK(after.total_gate_count <= before.total_gate_count);
        CHECK(after.total_depth <= before.total_depth);
    }
}

TEST_CASE("optimized counts never exceed naive counts") {
    for (auto f : {Family::CdkmShallow, Family::CdkmCompact, Family::TtkAdder,
                   Family::CdkmComparator, Family::TtkComparator}) {
        for (int n = 2; n <= 16; ++n) {
            Circuit high = build(f, n);
            MetricReport naive = metrics(compile(high, CompileMode::Naive).circuit);
            MetricReport opt = metrics(compile(high, CompileMode::Optimized).circuit);
            CHECK(opt.t_count <= naive.t_count);
            CHECK(opt.cnot_count <= naive.cnot_count);
        }
    }
}

TEST_CASE("measured cascade metrics match the closed forms for up to ten layers") {
    for (auto shape : {CascadeShape::ToffoliLeft, CascadeShape::PeresRight, CascadeShape::VToffPeres,
                       CascadeShape::VToffToff}) {
        for (int k = 1; k <= 10; ++k) {
            CascadePrediction pred = cascade_metrics_formula(shape, k);
            MetricReport m = metrics(compile(build_cascade(shape, k), CompileMode::Optimized).circuit);
            CHECK(m.t_count == pred.post.t_count);
            CHECK(m.cnot_count == pred.post.cnot_count);
            CHECK(m.t_depth <= pred.post.t_depth);
            CHECK(m.cnot_depth <= pred.post.cnot_depth);
        }
    }
}

TEST_CASE("cascade formula spot values") {
    CascadePrediction left = cascade_metrics_formula(CascadeShape::ToffoliLeft, 2);
    CHECK(left.post.t_depth == 5);
    CHECK(left.post.t_count == 14);
    CHECK(left.post.cnot_depth == 11);
    CHECK(left.post.cnot_count == 14);

    CascadePrediction right = cascade_metrics_formula(CascadeShape::PeresRight, 2);
    CHECK(right.post.t_depth == 5);
    CHECK(right.post.t_count == 14);
    CHECK(right.post.cnot_depth == 9);
    CHECK(right.post.cnot_count == 10);

    CascadePrediction v = cascade_metrics_formula(CascadeShape::VToffPeres, 2);
    CHECK(v.pre.t_count == 28);
    CHECK(v.post.t_count == 24);  // 14k - 2k at k = 2

    CHECK_THROWS_AS(cascade_metrics_formula(CascadeShape::ToffoliLeft, 0), Error);
}

TEST_CASE("optimized mode without segments falls back to naive with a warning") {
    Circuit c(3);
    c.add(toffoli(0, 1, 2));
    CompileResult res = compile(c, CompileMode::Optimized);
    CHECK(res.fell_back_to_naive);
    CompileResult naive = compile(c, CompileMode::Naive);
    CHECK(res.circuit.gates() == naive.circuit.gates());

    CompileResult tagged = compile(build_cascade(CascadeShape::ToffoliLeft, 2), CompileMode::Optimized);
    CHECK(!tagged.fell_back_to_naive);
}

TEST_CASE("compilation output is Clifford+T only") {
    for (auto f : {Family::CdkmShallow, Family::TtkComparator}) {
        Circuit c = compile(build(f, 3), CompileMode::Optimized).circuit;
        CHECK(c.is_clifford_t());
    }
}
