// Acceptance suite: one pass/fail line per criterion, with per-cell detail
// for metric regressions. Exit status is the number of failed criteria.
//
// An optional argv[1] names the CLI binary; when given, an appendix checks
// the synth/compile/metrics/export pipeline and the exit-code contract.

#include "rca/builders.hpp"
#include "rca/compile.hpp"
#include "rca/json_io.hpp"
#include "rca/metrics.hpp"
#include "rca/qasm.hpp"
#include "rca/semantics.hpp"
#include "rca/verify.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

using namespace rca;

namespace {

int g_failed_criteria = 0;
std::vector<std::string> g_notes;

void criterion(int number, const std::string& name, bool pass) {
    std::printf("criterion %d: %-58s %s\n", number, name.c_str(), pass ? "PASS" : "FAIL");
    if (!pass) ++g_failed_criteria;
}

void note(const std::string& line) {
    g_notes.push_back(line);
    std::printf("    %s\n", line.c_str());
}

struct GatedRow {
    TableKind table;
    std::string label;
};

const std::vector<GatedRow>& adder_rows() {
    static const std::vector<GatedRow> rows = {
        {TableKind::Adders, "Section 3.1"},
        {TableKind::Adders, "Section 3.2"},
        {TableKind::Adders, "Section 3.3"},
        {TableKind::Adders, "[CDKM04] shallow (naive)"},
        {TableKind::Adders, "[TTK10] (naive)"},
    };
    return rows;
}

const std::vector<GatedRow>& comparator_rows() {
    static const std::vector<GatedRow> rows = {
        {TableKind::Comparators, "Section 4.1"},
        {TableKind::Comparators, "Section 4.2"},
        {TableKind::Comparators, "[CDKM04] (naive)"},
        {TableKind::Comparators, "[TTK10] (naive)"},
    };
    return rows;
}

std::vector<RowReport> rows_for(const std::vector<GatedRow>& gated, const std::vector<int>& ns) {
    std::vector<RowReport> picked;
    for (const GatedRow& g : gated) {
        auto all = reproduce_table(g.table, ns);
        for (auto& r : all)
            if (r.label == g.label) picked.push_back(r);
    }
    return picked;
}

bool check_counts(const std::vector<RowReport>& rows) {
    bool ok = true;
    for (const auto& r : rows) {
        if (!r.measured) continue;
        if (r.rel_t_count != "=" || r.rel_cnot_count != "=") {
            ok = false;
            note(r.label + " n=" + std::to_string(r.n) + ": T-count " +
                 std::to_string(r.measured->t_count) + " vs " + std::to_string(r.formula.t_count) +
                 ", CNOT-count " + std::to_string(r.measured->cnot_count) + " vs " +
                 std::to_string(r.formula.cnot_count));
        }
    }
    return ok;
}

bool check_depths(const std::vector<RowReport>& rows) {
    bool ok = true;
    for (const auto& r : rows) {
        if (!r.measured) continue;
        std::string detail = r.label + " n=" + std::to_string(r.n) + ": T-depth " +
                             std::to_string(r.measured->t_depth) + "/" +
                             std::to_string(r.formula.t_depth) + ", CNOT-depth " +
                             std::to_string(r.measured->cnot_depth) + "/" +
                             std::to_string(r.formula.cnot_depth);
        if (r.rel_t_depth == ">" || r.rel_cnot_depth == ">") {
            ok = false;
            note("exceeded: " + detail);
        }
    }
    return ok;
}

double elapsed_s(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

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

const Family kFamilies[] = {Family::CdkmShallow, Family::CdkmCompact, Family::TtkAdder,
                            Family::CdkmComparator, Family::TtkComparator};

// ---- criteria ----

void criterion_1() {
    auto t0 = std::chrono::steady_clock::now();
    auto rows = rows_for(adder_rows(), {4, 6, 8, 16});
    double secs = elapsed_s(t0);
    bool ok = check_counts(rows);
    if (secs >= 5.0) {
        ok = false;
        note("runtime " + std::to_string(secs) + " s exceeds the 5 s budget");
    }
    criterion(1, "adder count regression (Table 1 in-scope rows)", ok);
}

void criterion_2() {
    auto rows = rows_for(comparator_rows(), {4, 6, 8, 16});
    criterion(2, "comparator count regression (Table 2 in-scope rows)", check_counts(rows));
}

void criterion_3() {
    std::vector<RowReport> rows = rows_for(adder_rows(), {4, 6, 8, 16});
    auto comp = rows_for(comparator_rows(), {4, 6, 8, 16});
    rows.insert(rows.end(), comp.begin(), comp.end());
    criterion(3, "depth regression (measured never above formula)", check_depths(rows));
}

void criterion_4() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (Family f : kFamilies)
        for (int n = 2; n <= 5; ++n)
            for (auto mode : {VerifyMode::HighLevel, VerifyMode::Naive, VerifyMode::Optimized}) {
                VerifyReport rep = verify_functional_exhaustive(f, n, mode);
                uint64_t want = 1ull << (2 * n + 1);
                if (!rep.pass() || rep.checks != want) {
                    ok = false;
                    note(std::string(family_name(f)) + " n=" + std::to_string(n) + " " +
                         verify_mode_name(mode) + ": " + std::to_string(rep.failures.size()) +
                         " failures over " + std::to_string(rep.checks) + " inputs");
                }
            }
    double secs = elapsed_s(t0);
    if (secs >= 120.0) {
        ok = false;
        note("runtime " + std::to_string(secs) + " s exceeds the 2 min budget");
    }
    criterion(4, "exhaustive functional correctness (all families, n=2..5)", ok);
}

void criterion_5() {
    bool ok = true;
    for (Family f : kFamilies)
        for (int n = 2; n <= 3; ++n) {
            VerifyReport rep = verify_unitary(f, n);
            if (!rep.pass()) {
                ok = false;
                note(std::string(family_name(f)) + " n=" + std::to_string(n) +
                     ": max deviation " + std::to_string(rep.max_unitary_deviation));
            }
        }
    criterion(5, "unitary equivalence of the three modes (n=2,3)", ok);
}

void criterion_6() {
    bool ok = true;
    PermutationTable toff = gate_permutation(GateKind::TOFFOLI);
    PermutationTable p = gate_permutation(GateKind::PERES);
    PermutationTable r = gate_permutation(GateKind::TR);
    PermutationTable cn = identity_permutation(3);
    for (uint32_t i = 0; i < 8; ++i) cn.map[i] = (i & 1u) ? (i ^ 2u) : i;
    if (!(compose(p, cn) == toff)) ok = false, note("Peres followed by CNOT is not Toffoli");
    if (!(compose(cn, r) == toff)) ok = false, note("CNOT followed by TR is not Toffoli");
    if (!(compose(p, r) == identity_permutation(3))) ok = false, note("Peres and TR not inverse");

    // the published TR2 claim must mismatch on exactly the four A != B states
    PermutationTable claimed, actual;
    claimed.arity = actual.arity = 3;
    claimed.map.resize(8);
    actual.map.resize(8);
    for (uint32_t i = 0; i < 8; ++i) {
        uint32_t a = i & 1u, b = (i >> 1) & 1u, cbit = (i >> 2) & 1u;
        claimed.map[i] = (a ^ b) | (b << 1) | ((cbit ^ (a & (b ^ 1u))) << 2);
        actual.map[i] = (a ^ b) | (b << 1) | ((cbit ^ ((a ^ 1u) & b)) << 2);
    }
    auto diff = mismatches(actual, claimed);
    bool claim_ok = diff.size() == 4;
    for (uint32_t s : diff)
        if ((s & 1u) == ((s >> 1) & 1u)) claim_ok = false;
    if (!claim_ok) ok = false, note("TR2 claim check did not isolate the four A != B states");

    criterion(6, "gate-relation suite (symbol relations, inverses, TR2 claim)", ok);
}

void criterion_7() {
    bool ok = true;
    MetricReport fig3 =
        metrics(compile(build_cascade(CascadeShape::ToffoliLeft, 2), CompileMode::Optimized).circuit);
    if (!(fig3.t_depth == 5 && fig3.t_count == 14 && fig3.cnot_depth == 11 && fig3.cnot_count == 14)) {
        ok = false;
        note("two-Toffoli cascade measured (" + std::to_string(fig3.t_depth) + "," +
             std::to_string(fig3.t_count) + "," + std::to_string(fig3.cnot_depth) + "," +
             std::to_string(fig3.cnot_count) + ") expected (5,14,11,14)");
    }
    MetricReport fig4 =
        metrics(compile(build_cascade(CascadeShape::PeresRight, 2), CompileMode::Optimized).circuit);
    if (!(fig4.t_depth == 5 && fig4.t_count == 14 && fig4.cnot_depth == 9 && fig4.cnot_count == 10)) {
        ok = false;
        note("two-Peres cascade measured (" + std::to_string(fig4.t_depth) + "," +
             std::to_string(fig4.t_count) + "," + std::to_string(fig4.cnot_depth) + "," +
             std::to_string(fig4.cnot_count) + ") expected (5,14,9,10)");
    }
    for (int k = 1; k <= 10; ++k) {
        MetricReport vtp =
            metrics(compile(build_cascade(CascadeShape::VToffPeres, k), CompileMode::Optimized).circuit);
        if (vtp.t_count != 12ull * k) {
            ok = false;
            note("Toffoli-Peres V at k=" + std::to_string(k) + ": T-count " +
                 std::to_string(vtp.t_count) + " expected " + std::to_string(12 * k));
        }
        MetricReport vtt =
            metrics(compile(build_cascade(CascadeShape::VToffToff, k), CompileMode::Optimized).circuit);
        if (vtt.t_count != 10ull * k || vtt.cnot_count != 10ull * k) {
            ok = false;
            note("Toffoli-Toffoli V at k=" + std::to_string(k) + ": counts (" +
                 std::to_string(vtt.t_count) + "," + std::to_string(vtt.cnot_count) +
                 ") expected 14k-4k on both");
        }
    }
    criterion(7, "cascade-formula suite (stitched metrics and V reductions)", ok);
}

void criterion_8() {
    bool ok = true;
    std::mt19937_64 rng(0x5EEDULL);
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n_qubits = 2 + rng() % 5;             // up to 6 qubits
        int n_gates = 5 + static_cast<int>(rng() % 36);  // up to 40 gates
        Circuit c = random_cliffordt(rng, n_qubits, n_gates);
        Circuit reduced = cancel_pairs(c);
        double dev = max_deviation(full_unitary(c), full_unitary(reduced));
        MetricReport before = metrics(c), after = metrics(reduced);
        bool shrunk = after.t_count <= before.t_count && after.t_depth <= before.t_depth &&
                      after.cnot_count <= before.cnot_count && after.cnot_depth <= before.cnot_depth &&
                      after.total_gate_count <= before.total_gate_count &&
                      after.total_depth <= before.total_depth;
        if (dev > 1e-10 || !shrunk) {
            ok = false;
            note("trial " + std::to_string(trial) + ": deviation " + std::to_string(dev) +
                 (shrunk ? "" : ", a metric increased"));
            break;
        }
    }
    criterion(8, "cancel_pairs soundness on 200 seeded random circuits", ok);
}

// ---- CLI appendix ----

int run_cli(const std::string& bin, const std::string& args, std::string* out = nullptr) {
    std::string cmd = bin + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    std::string text;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) text.append(buf, got);
    int status = pclose(pipe);
    if (out) *out = text;
    return WEXITSTATUS(status);
}

bool cli_appendix(const std::string& bin) {
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            note("cli: " + what);
        }
    };
    std::string dir = "/tmp/rca_acceptance";
    std::string mk = "mkdir -p " + dir;
    if (std::system(mk.c_str()) != 0) return false;

    expect(run_cli(bin, "synth --family ttk-adder --n 4 --out " + dir + "/ttk4.json") == 0,
           "synth ttk-adder");
    std::string doc;
    run_cli(bin, "metrics " + dir + "/ttk4.json --format json", &doc);
    expect(doc.empty(), "metrics on a composite circuit must fail");
    expect(run_cli(bin, "metrics " + dir + "/ttk4.json") == 1, "metrics composite exit 1");

    expect(run_cli(bin, "compile " + dir + "/ttk4.json --mode optimized --out " + dir + "/opt.json") == 0,
           "compile optimized");
    std::string mj;
    expect(run_cli(bin, "metrics " + dir + "/opt.json --format json", &mj) == 0, "metrics optimized");
    expect(mj.find("\"t_count\": 43") != std::string::npos, "optimized ttk n=4 has T-count 43");

    expect(run_cli(bin, "compile " + dir + "/ttk4.json --mode naive --out " + dir + "/nv.json") == 0,
           "compile naive");
    expect(run_cli(bin, "metrics " + dir + "/nv.json --format json", &mj) == 0, "metrics naive");
    expect(mj.find("\"t_count\": 49") != std::string::npos, "naive ttk n=4 has T-count 49");

    expect(run_cli(bin, "synth --family bogus --n 4 --out " + dir + "/x.json") == 2,
           "unknown family exits 2");
    expect(run_cli(bin, "synth --family ttk-adder --n 4 --badflag 1 --out " + dir + "/x.json") == 2,
           "unknown flag exits 2");
    expect(run_cli(bin, "verify --family ttk-adder --n 9 --level exhaustive") == 2,
           "exhaustive size cap exits 2");
    expect(run_cli(bin, "verify --family cdkm-comparator --n 3 --level exhaustive --mode optimized") == 0,
           "comparator exhaustive verify");
    expect(run_cli(bin, "verify --family ttk-adder --n 2 --level unitary") == 0, "unitary verify");
    expect(run_cli(bin, "table --which adders --n 1") == 2, "table below range exits 2");

    std::string qasm;
    expect(run_cli(bin, "export " + dir + "/opt.json --format qasm2", &qasm) == 0, "export qasm");
    expect(check_qasm2(qasm).empty(), "exported qasm parses");

    // determinism: identical invocations, identical bytes
    run_cli(bin, "synth --family cdkm-shallow --n 6 --out " + dir + "/a.json");
    run_cli(bin, "synth --family cdkm-shallow --n 6 --out " + dir + "/b.json");
    expect(run_cli(bin, "", nullptr) != 0, "bare invocation is a usage error");
    std::string diff_cmd = "cmp -s " + dir + "/a.json " + dir + "/b.json";
    expect(std::system(diff_cmd.c_str()) == 0, "byte-identical outputs");
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    std::printf("acceptance suite\n================\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();

    if (argc > 1) {
        bool cli_ok = cli_appendix(argv[1]);
        std::printf("appendix:    %-58s %s\n", "CLI pipeline and exit-code contract",
                    cli_ok ? "PASS" : "FAIL");
        if (!cli_ok) ++g_failed_criteria;
    }

    if (g_failed_criteria == 0) {
        std::printf("all criteria passed\n");
    } else {
        std::printf("%d criterion(s) failed; see the notes above and the table command "
                    "for full measured-vs-formula detail\n",
                    g_failed_criteria);
    }
    return g_failed_criteria;
}
