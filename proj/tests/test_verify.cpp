#include "rca/semantics.hpp"
#include "rca/verify.hpp"

#include <doctest.h>

using namespace rca;

TEST_CASE("exhaustive functional verification per mode") {
    VerifyReport hl = verify_functional_exhaustive(Family::CdkmShallow, 3, VerifyMode::HighLevel);
    CHECK(hl.checks == 128);
    CHECK(hl.pass());

    VerifyReport opt = verify_functional_exhaustive(Family::TtkComparator, 2, VerifyMode::Optimized);
    CHECK(opt.checks == 32);
    CHECK(opt.pass());

    CHECK_THROWS_AS(verify_functional_exhaustive(Family::TtkAdder, 9, VerifyMode::HighLevel), Error);
}

TEST_CASE("random verification is seeded and reproducible") {
    VerifyReport r1 = verify_functional_random(Family::CdkmCompact, 8, VerifyMode::Naive, 500, 42);
    CHECK(r1.checks == 500);
    CHECK(r1.pass());
    CHECK(r1.seed == 42);
}

TEST_CASE("unitary equivalence across modes") {
    CHECK(verify_unitary(Family::TtkAdder, 2).pass());
    CHECK(verify_unitary(Family::CdkmShallow, 2).pass());
    CHECK_THROWS_AS(verify_unitary(Family::CdkmShallow, 4), Error);
}

TEST_CASE("a corrupted compilation is caught with a deviation report") {
    Circuit high = build(Family::TtkAdder, 2);
    Circuit bad = compile(high, CompileMode::Optimized).circuit;
    Circuit corrupted(bad.n_qubits());
    bool flipped = false;
    for (const Gate& g : bad.gates()) {
        if (!flipped && g.kind == GateKind::T) {
            corrupted.add(tdg(g.q(0)));
            flipped = true;
        } else {
            corrupted.add(g);
        }
    }
    REQUIRE(flipped);
    double dev = max_deviation(full_unitary(high), full_unitary(corrupted));
    CHECK(dev > 1e-9);
}

TEST_CASE("table rows evaluate the published formulas") {
    auto rows = reproduce_table(TableKind::Adders, {6});
    bool seen = false;
    for (const auto& r : rows) {
        if (r.label == "Section 3.1") {
            seen = true;
            CHECK(r.formula.cnot_depth == 50);
            CHECK(r.formula.cnot_count == 86);
            CHECK(r.formula.t_depth == 20);
            CHECK(r.formula.t_count == 67);
            REQUIRE(r.measured.has_value());
            CHECK(r.rel_cnot_count == "=");
            CHECK(r.rel_t_count == "=");
            CHECK(r.rel_cnot_depth != ">");
            CHECK(r.rel_t_depth != ">");
            CHECK(r.pass);
        }
        if (r.label == "[TK05]") CHECK(!r.measured.has_value());
    }
    CHECK(seen);
}

TEST_CASE("naive TTK row at n = 4") {
    auto rows = reproduce_table(TableKind::Adders, {4});
    for (const auto& r : rows) {
        if (r.label != "[TTK10] (naive)") continue;
        CHECK(r.formula.cnot_depth == 52);
        CHECK(r.formula.cnot_count == 56);
        CHECK(r.formula.t_depth == 21);
        CHECK(r.formula.t_count == 49);
        CHECK(r.pass);
    }
}

TEST_CASE("comparator rows at n = 4") {
    auto rows = reproduce_table(TableKind::Comparators, {4});
    for (const auto& r : rows) {
        if (r.label == "Section 4.1") {
            CHECK(r.formula.cnot_depth == 37);
            CHECK(r.formula.cnot_count == 50);
            CHECK(r.formula.t_depth == 15);
            CHECK(r.formula.t_count == 37);
            CHECK(r.pass);
        }
        if (r.label == "Section 4.2") {
            CHECK(r.formula.cnot_depth == 34);
            CHECK(r.formula.cnot_count == 47);
            CHECK(r.formula.t_depth == 13);
            CHECK(r.formula.t_count == 37);
            REQUIRE(r.measured.has_value());
            // counts land exactly on the published formulas
            CHECK(r.rel_cnot_count == "=");
            CHECK(r.rel_t_count == "=");
        }
    }
}

TEST_CASE("the size-efficient adder dominates the shallow one on T-count") {
    for (int n = 2; n <= 16; ++n) {
        auto compact = metrics(compile(build(Family::CdkmCompact, n), CompileMode::Optimized).circuit);
        auto shallow = metrics(compile(build(Family::CdkmShallow, n), CompileMode::Optimized).circuit);
        CHECK(compact.t_count == 10ull * n - 3);
        CHECK(shallow.t_count == 12ull * n - 5);
        CHECK(compact.t_count < shallow.t_count);
    }
}

TEST_CASE("table range checking") {
    CHECK_THROWS_AS(reproduce_table(TableKind::Adders, {1}), Error);
    CHECK_THROWS_AS(reproduce_table(TableKind::Adders, {65}), Error);
}

TEST_CASE("table reports serialize with the row schema") {
    auto rows = reproduce_table(TableKind::Comparators, {4});
    auto j = table_to_json(rows);
    REQUIRE(j.is_array());
    for (const auto& row : j) {
        CHECK(row.contains("label"));
        CHECK(row.contains("n"));
        CHECK(row.contains("formula"));
        CHECK(row.contains("measured"));
        CHECK(row.contains("relation"));
        CHECK(row.contains("pass"));
    }
    std::string text = table_to_text(TableKind::Comparators, rows);
    CHECK(text.find("Section 4.1") != std::string::npos);
}
