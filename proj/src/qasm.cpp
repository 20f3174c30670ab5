#include "rca/qasm.hpp"

#include <regex>
#include <sstream>

namespace rca {

std::string to_qasm2(const Circuit& c) {
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    out << "qreg q[" << c.n_qubits() << "];\n";
    for (const Gate& g : c.gates()) {
        switch (g.kind) {
            case GateKind::X: out << "x q[" << g.q(0) << "];\n"; break;
            case GateKind::H: out << "h q[" << g.q(0) << "];\n"; break;
            case GateKind::T: out << "t q[" << g.q(0) << "];\n"; break;
            case GateKind::TDG: out << "tdg q[" << g.q(0) << "];\n"; break;
            case GateKind::CNOT:
                out << "cx q[" << g.q(0) << "],q[" << g.q(1) << "];\n";
                break;
            default:
                throw Error(ErrorCode::CompositeGatePresent,
                            "cannot export composite gate; compile first");
        }
    }
    return out.str();
}

std::string check_qasm2(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n_qubits = -1;
    static const std::regex qreg_re(R"(^qreg q\[(\d+)\];$)");
    static const std::regex gate1_re(R"(^(x|h|t|tdg) q\[(\d+)\];$)");
    static const std::regex gate2_re(R"(^cx q\[(\d+)\],q\[(\d+)\];$)");
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (lineno == 1) {
            if (line != "OPENQASM 2.0;") return "line 1: expected OPENQASM 2.0 header";
            continue;
        }
        if (lineno == 2) {
            if (line != "include \"qelib1.inc\";") return "line 2: expected qelib1 include";
            continue;
        }
        std::smatch m;
        if (std::regex_match(line, m, qreg_re)) {
            if (n_qubits >= 0) return "line " + std::to_string(lineno) + ": duplicate qreg";
            n_qubits = std::stol(m[1]);
            continue;
        }
        if (n_qubits < 0) return "line " + std::to_string(lineno) + ": statement before qreg";
        if (std::regex_match(line, m, gate1_re)) {
            if (std::stol(m[2]) >= n_qubits)
                return "line " + std::to_string(lineno) + ": qubit out of range";
            continue;
        }
        if (std::regex_match(line, m, gate2_re)) {
            long a = std::stol(m[1]), b = std::stol(m[2]);
            if (a >= n_qubits || b >= n_qubits)
                return "line " + std::to_string(lineno) + ": qubit out of range";
            if (a == b) return "line " + std::to_string(lineno) + ": cx operands must differ";
            continue;
        }
        return "line " + std::to_string(lineno) + ": unrecognized statement";
    }
    if (lineno < 3 || n_qubits < 0) return "missing header or qreg declaration";
    return "";
}

}  // namespace rca
