#include "rca/verify.hpp"

#include "rca/semantics.hpp"

#include <cmath>
#include <iomanip>
#include <random>
#include <sstream>

namespace rca {

VerifyMode verify_mode_from_name(const std::string& name) {
    if (name == "high-level") return VerifyMode::HighLevel;
    if (name == "naive") return VerifyMode::Naive;
    if (name == "optimized") return VerifyMode::Optimized;
    throw Error(ErrorCode::SchemaError, "unknown verify mode \"" + name + "\"");
}

const char* verify_mode_name(VerifyMode m) {
    switch (m) {
        case VerifyMode::HighLevel: return "high-level";
        case VerifyMode::Naive: return "naive";
        case VerifyMode::Optimized: return "optimized";
    }
    return "?";
}

namespace {

Circuit circuit_for_mode(Family f, int n, VerifyMode mode) {
    Circuit high = build(f, n);
    if (mode == VerifyMode::HighLevel) return high;
    return compile(high, mode == VerifyMode::Naive ? CompileMode::Naive : CompileMode::Optimized)
        .circuit;
}

void run_case(const Circuit& hl_roles, const Circuit& target, VerifyMode mode, Family f, int n,
              uint64_t a, uint64_t b, int z, VerifyReport& rep) {
    uint64_t input = pack_registers(hl_roles, a, b, z);
    uint64_t expected = oracle_output(f, n, hl_roles, a, b, z);
    ++rep.checks;
    if (mode == VerifyMode::HighLevel) {
        uint64_t got = simulate_permutation(target, input);
        if (got != expected) rep.failures.push_back({input, expected, got, 1.0});
        return;
    }
    SparseState out = simulate_sparse(target, SparseState::basis(target.n_qubits(), input));
    double amp = std::abs(out.amp(expected));
    if (amp <= 1.0 - 1e-9) {
        Failure fail{input, expected, expected, amp};
        // report the dominant stray state for diagnostics
        double best = 0;
        for (const auto& [k, v] : out.amps)
            if (k != expected && std::abs(v) > best) {
                best = std::abs(v);
                fail.got = k;
            }
        rep.failures.push_back(fail);
    }
}

}  // namespace

VerifyReport verify_functional_exhaustive(Family f, int n, VerifyMode mode) {
    uint32_t wires = family_wires(f, n);
    if (wires > 13)
        throw Error(ErrorCode::TooLargeForExhaustive,
                    "exhaustive verification capped at 13 wires; use the random strategy");
    VerifyReport rep;
    rep.family = family_name(f);
    rep.n = n;
    rep.mode = verify_mode_name(mode);
    rep.strategy = "exhaustive";
    Circuit hl = build(f, n);
    Circuit target = circuit_for_mode(f, n, mode);
    for (uint64_t a = 0; a < (1ull << n); ++a)
        for (uint64_t b = 0; b < (1ull << n); ++b)
            for (int z = 0; z < 2; ++z) run_case(hl, target, mode, f, n, a, b, z, rep);
    return rep;
}

VerifyReport verify_functional_random(Family f, int n, VerifyMode mode, int samples, uint64_t seed) {
    VerifyReport rep;
    rep.family = family_name(f);
    rep.n = n;
    rep.mode = verify_mode_name(mode);
    rep.strategy = "random(" + std::to_string(samples) + ")";
    rep.seed = seed;
    Circuit hl = build(f, n);
    Circuit target = circuit_for_mode(f, n, mode);
    std::mt19937_64 rng(seed);
    uint64_t mask = (n >= 64) ? ~0ull : ((1ull << n) - 1);
    for (int i = 0; i < samples; ++i) {
        uint64_t a = rng() & mask;
        uint64_t b = rng() & mask;
        int z = static_cast<int>(rng() & 1u);
        run_case(hl, target, mode, f, n, a, b, z, rep);
    }
    return rep;
}

VerifyReport verify_unitary(Family f, int n) {
    uint32_t wires = family_wires(f, n);
    if (wires > 8) throw Error(ErrorCode::TooLarge, "unitary verification capped at 8 wires");
    VerifyReport rep;
    rep.family = family_name(f);
    rep.n = n;
    rep.mode = "unitary";
    rep.strategy = "unitary";
    Circuit high = build(f, n);
    UnitaryMatrix u_high = full_unitary(high);
    UnitaryMatrix u_naive = full_unitary(compile(high, CompileMode::Naive).circuit);
    UnitaryMatrix u_opt = full_unitary(compile(high, CompileMode::Optimized).circuit);
    double d1 = max_deviation(u_high, u_naive);
    double d2 = max_deviation(u_high, u_opt);
    double d3 = max_deviation(u_naive, u_opt);
    rep.max_unitary_deviation = std::max({d1, d2, d3});
    rep.checks = 3;
    if (rep.max_unitary_deviation > 1e-9)
        rep.failures.push_back({0, 0, 0, rep.max_unitary_deviation});
    return rep;
}

nlohmann::json report_to_json(const VerifyReport& r) {
    nlohmann::json j;
    j["family"] = r.family;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["strategy"] = r.strategy;
    if (r.strategy.rfind("random", 0) == 0) j["seed"] = r.seed;
    j["checks"] = r.checks;
    j["pass"] = r.pass();
    if (r.mode == "unitary") j["max_deviation"] = r.max_unitary_deviation;
    nlohmann::json fails = nlohmann::json::array();
    for (const auto& f : r.failures) {
        nlohmann::json e;
        e["input"] = f.input;
        e["expected"] = f.expected;
        e["got"] = f.got;
        if (f.amplitude < 1.0) e["amplitude"] = f.amplitude;
        fails.push_back(e);
        if (fails.size() >= 16) break;  // cap the report size
    }
    j["failures"] = fails;
    j["failure_count"] = r.failures.size();
    return j;
}

std::string Affine::str() const {
    std::ostringstream out;
    if (coef != 0) {
        if (coef != 1) out << coef;
        out << "n";
        if (constant > 0) out << "+" << constant;
        else if (constant < 0) out << constant;
    } else {
        out << constant;
    }
    return out.str();
}

namespace {

FormulaRow reference_row(std::string label, Affine cd, Affine cc, Affine td, Affine tc, int anc) {
    FormulaRow r;
    r.label = std::move(label);
    r.cnot_depth = cd;
    r.cnot_count = cc;
    r.t_depth = td;
    r.t_count = tc;
    r.ancilla = anc;
    return r;
}

FormulaRow measured_row(std::string label, Family fam, CompileMode mode, Affine cd, Affine cc,
                        Affine td, Affine tc, int anc) {
    FormulaRow r = reference_row(std::move(label), cd, cc, td, tc, anc);
    r.measured = true;
    r.family = fam;
    r.mode = mode;
    return r;
}

std::vector<FormulaRow> make_adder_rows() {
    std::vector<FormulaRow> rows;
    rows.push_back(reference_row("[TK05]", {26, -42}, {34, -41}, {9, -9}, {28, -35}, 0));
    rows.push_back(reference_row("[SRV08]", {16, 3}, {18, 1}, {6, 0}, {14, 0}, 1));
    {
        auto r = measured_row("[CDKM04] compact (naive)", Family::CdkmCompact, CompileMode::Naive,
                              {16, -25}, {18, -18}, {6, -9}, {14, -21}, 1);
        r.flagged = true;
        r.note = "table constants are internally inconsistent (slice sums give other totals; "
                 "the text variant is 16n-24 / 18n-17); reported, not gated";
        rows.push_back(r);
    }
    rows.push_back(measured_row("[TTK10] (naive)", Family::TtkAdder, CompileMode::Naive, {15, -8},
                                {17, -12}, {6, -3}, {14, -7}, 0));
    rows.push_back(reference_row("[TR11]", {14, -1}, {18, -6}, {6, -3}, {14, -7}, 1));
    rows.push_back(measured_row("[CDKM04] shallow (naive)", Family::CdkmShallow, CompileMode::Naive,
                                {13, -3}, {17, -10}, {6, -3}, {14, -7}, 1));
    rows.push_back(measured_row("Section 3.2", Family::CdkmCompact, CompileMode::Optimized, {11, -8},
                                {14, -10}, {4, -2}, {10, -3}, 1));
    rows.push_back(measured_row("Section 3.3", Family::TtkAdder, CompileMode::Optimized, {10, -3},
                                {16, -12}, {3, 2}, {12, -5}, 0));
    rows.push_back(measured_row("Section 3.1", Family::CdkmShallow, CompileMode::Optimized, {8, 2},
                                {16, -10}, {3, 2}, {12, -5}, 1));
    return rows;
}

std::vector<FormulaRow> make_comparator_rows() {
    std::vector<FormulaRow> rows;
    rows.push_back(reference_row("[TA09]", {18, 3}, {20, 1}, {6, 0}, {14, 0}, 1));
    rows.push_back(measured_row("[TTK10] (naive)", Family::TtkComparator, CompileMode::Naive,
                                {16, -8}, {18, -12}, {6, -3}, {14, -7}, 0));
    rows.push_back(measured_row("[CDKM04] (naive)", Family::CdkmComparator, CompileMode::Naive,
                                {14, -3}, {18, -7}, {6, -3}, {14, -7}, 1));
    // The comparator table prints the Section 4.2 T-count as 10n-6; the
    // construction gives 10(n-1)+7 = 10n-3, which this row adopts.
    rows.push_back(measured_row("Section 4.2", Family::TtkComparator, CompileMode::Optimized,
                                {10, -6}, {14, -9}, {4, -3}, {10, -3}, 0));
    rows.push_back(measured_row("Section 4.1", Family::CdkmComparator, CompileMode::Optimized,
                                {8, 5}, {14, -6}, {4, -1}, {10, -3}, 1));
    return rows;
}

}  // namespace

const std::vector<FormulaRow>& table_rows(TableKind which) {
    static const std::vector<FormulaRow> adders = make_adder_rows();
    static const std::vector<FormulaRow> comparators = make_comparator_rows();
    return which == TableKind::Adders ? adders : comparators;
}

namespace {

std::string relation(uint64_t measured, int64_t formula) {
    auto f = static_cast<int64_t>(measured);
    if (f == formula) return "=";
    return f < formula ? "<" : ">";
}

}  // namespace

std::vector<RowReport> reproduce_table(TableKind which, const std::vector<int>& ns) {
    std::vector<RowReport> out;
    for (int n : ns) {
        if (n < 2 || n > 64) throw Error(ErrorCode::OutOfRange, "table rows cover n in [2, 64]");
        for (const FormulaRow& row : table_rows(which)) {
            RowReport rr;
            rr.label = row.label;
            rr.n = n;
            rr.flagged = row.flagged;
            rr.note = row.note;
            rr.formula.cnot_depth = static_cast<uint64_t>(row.cnot_depth.eval(n));
            rr.formula.cnot_count = static_cast<uint64_t>(row.cnot_count.eval(n));
            rr.formula.t_depth = static_cast<uint64_t>(row.t_depth.eval(n));
            rr.formula.t_count = static_cast<uint64_t>(row.t_count.eval(n));
            if (row.measured) {
                Circuit compiled = compile(build(*row.family, n), row.mode).circuit;
                MetricReport m = metrics(compiled);
                rr.measured = m;
                rr.rel_cnot_depth = relation(m.cnot_depth, row.cnot_depth.eval(n));
                rr.rel_cnot_count = relation(m.cnot_count, row.cnot_count.eval(n));
                rr.rel_t_depth = relation(m.t_depth, row.t_depth.eval(n));
                rr.rel_t_count = relation(m.t_count, row.t_count.eval(n));
                rr.pass = rr.rel_cnot_count == "=" && rr.rel_t_count == "=" &&
                          rr.rel_cnot_depth != ">" && rr.rel_t_depth != ">";
            }
            out.push_back(std::move(rr));
        }
    }
    return out;
}

nlohmann::json table_to_json(const std::vector<RowReport>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json j;
        j["label"] = r.label;
        j["n"] = r.n;
        j["formula"] = {{"cnot_depth", r.formula.cnot_depth},
                        {"cnot_count", r.formula.cnot_count},
                        {"t_depth", r.formula.t_depth},
                        {"t_count", r.formula.t_count}};
        if (r.measured) {
            j["measured"] = {{"cnot_depth", r.measured->cnot_depth},
                             {"cnot_count", r.measured->cnot_count},
                             {"t_depth", r.measured->t_depth},
                             {"t_count", r.measured->t_count}};
            j["relation"] = {{"cnot_depth", r.rel_cnot_depth},
                             {"cnot_count", r.rel_cnot_count},
                             {"t_depth", r.rel_t_depth},
                             {"t_count", r.rel_t_count}};
        } else {
            j["measured"] = nullptr;
            j["relation"] = nullptr;
        }
        j["pass"] = r.pass;
        if (r.flagged) {
            j["flagged"] = true;
            j["note"] = r.note;
        }
        arr.push_back(j);
    }
    return arr;
}

namespace {

std::string cell(const RowReport& r, uint64_t measured, uint64_t formula, const std::string& rel) {
    std::ostringstream out;
    if (!r.measured) out << "-/" << formula;
    else out << measured << rel << formula;
    return out.str();
}

}  // namespace

std::string table_to_text(TableKind which, const std::vector<RowReport>& rows) {
    std::ostringstream out;
    out << (which == TableKind::Adders ? "ripple-carry adders" : "ripple-carry comparators")
        << " (measured vs formula; counts must match, depths must not exceed)\n";
    out << std::left << std::setw(28) << "label" << std::setw(4) << "n" << std::setw(14)
        << "CNOT-depth" << std::setw(14) << "CNOT-count" << std::setw(13) << "T-depth"
        << std::setw(13) << "T-count" << "status\n";
    for (const auto& r : rows) {
        std::string status = !r.measured ? "reference" : (r.pass ? "pass" : "FAIL");
        if (r.flagged) status += " [flagged]";
        out << std::left << std::setw(28) << r.label << std::setw(4) << r.n << std::setw(14)
            << cell(r, r.measured ? r.measured->cnot_depth : 0, r.formula.cnot_depth, r.rel_cnot_depth)
            << std::setw(14)
            << cell(r, r.measured ? r.measured->cnot_count : 0, r.formula.cnot_count, r.rel_cnot_count)
            << std::setw(13)
            << cell(r, r.measured ? r.measured->t_depth : 0, r.formula.t_depth, r.rel_t_depth)
            << std::setw(13)
            << cell(r, r.measured ? r.measured->t_count : 0, r.formula.t_count, r.rel_t_count)
            << status << "\n";
        if (r.flagged && !r.note.empty()) out << "    note: " << r.note << "\n";
    }
    return out.str();
}

bool table_pass(const std::vector<RowReport>& rows) {
    for (const auto& r : rows)
        if (r.measured && !r.flagged && !r.pass) return false;
    return true;
}

}  // namespace rca
