#include "rca/json_io.hpp"

#include <fstream>

namespace rca {

using nlohmann::json;

namespace {

const char* role_name(RoleTag t) {
    switch (t) {
        case RoleTag::A: return "A";
        case RoleTag::B: return "B";
        case RoleTag::Ancilla: return "ANCILLA";
        case RoleTag::Z: return "Z";
    }
    return "?";
}

RoleTag role_from_name(const std::string& s) {
    if (s == "A") return RoleTag::A;
    if (s == "B") return RoleTag::B;
    if (s == "ANCILLA") return RoleTag::Ancilla;
    if (s == "Z") return RoleTag::Z;
    throw Error(ErrorCode::SchemaError, "unknown role \"" + s + "\"");
}

}  // namespace

json circuit_to_json(const Circuit& c) {
    json j;
    j["n_qubits"] = c.n_qubits();
    json roles = json::array();
    for (uint32_t wire = 0; wire < c.roles().size(); ++wire) {
        const QubitRole& r = c.roles()[wire];
        json e;
        e["wire"] = wire;
        e["role"] = role_name(r.tag);
        if (r.tag == RoleTag::A || r.tag == RoleTag::B) e["index"] = r.index;
        else e["index"] = nullptr;
        roles.push_back(e);
    }
    j["roles"] = roles;
    json gates = json::array();
    for (const Gate& g : c.gates()) {
        json e;
        e["kind"] = kind_name(g.kind);
        json qs = json::array();
        for (int i = 0; i < g.num_qubits(); ++i) qs.push_back(g.q(i));
        e["qubits"] = qs;
        gates.push_back(e);
    }
    j["gates"] = gates;
    json segments = json::array();
    for (const Segment& s : c.segments()) {
        json e;
        e["tag"] = segment_tag_string(s);
        e["from"] = s.from;
        e["to"] = s.to;
        segments.push_back(e);
    }
    j["segments"] = segments;
    return j;
}

Circuit circuit_from_json(const json& j) {
    try {
        if (!j.is_object() || !j.contains("n_qubits") || !j.contains("gates"))
            throw Error(ErrorCode::SchemaError, "circuit document requires n_qubits and gates");
        Circuit c(j.at("n_qubits").get<uint32_t>());
        if (j.contains("roles") && !j.at("roles").empty()) {
            std::vector<QubitRole> roles(c.n_qubits());
            for (const auto& e : j.at("roles")) {
                auto wire = e.at("wire").get<uint32_t>();
                if (wire >= c.n_qubits())
                    throw Error(ErrorCode::SchemaError, "role wire out of range");
                QubitRole r;
                r.tag = role_from_name(e.at("role").get<std::string>());
                r.index = e.at("index").is_null() ? -1 : e.at("index").get<int>();
                roles[wire] = r;
            }
            c.set_roles(std::move(roles));
        }
        size_t gate_no = 0;
        for (const auto& e : j.at("gates")) {
            GateKind kind = kind_from_name(e.at("kind").get<std::string>());
            const auto& qs = e.at("qubits");
            if (static_cast<int>(qs.size()) != arity(kind))
                throw Error(ErrorCode::SchemaError,
                            "gate " + std::to_string(gate_no) + " (\"" + std::string(kind_name(kind)) +
                                "\") expects " + std::to_string(arity(kind)) + " qubits, got " +
                                std::to_string(qs.size()));
            switch (arity(kind)) {
                case 1: c.add(Gate(kind, qs.at(0).get<uint32_t>())); break;
                case 2: c.add(Gate(kind, qs.at(0).get<uint32_t>(), qs.at(1).get<uint32_t>())); break;
                default:
                    c.add(Gate(kind, qs.at(0).get<uint32_t>(), qs.at(1).get<uint32_t>(),
                               qs.at(2).get<uint32_t>()));
                    break;
            }
            ++gate_no;
        }
        if (j.contains("segments")) {
            for (const auto& e : j.at("segments")) {
                Segment s = segment_from_tag_string(e.at("tag").get<std::string>(),
                                                    e.at("from").get<uint32_t>(),
                                                    e.at("to").get<uint32_t>());
                c.add_segment(s.tag, s.layer, s.from, s.to);
            }
        }
        c.validate();
        return c;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("malformed circuit document: ") + e.what());
    }
}

json compiled_to_json(const CompileResult& r) {
    json j = circuit_to_json(r.circuit);
    j["metadata"] = {{"mode", compile_mode_name(r.mode)}, {"fallback_naive", r.fell_back_to_naive}};
    return j;
}

void write_circuit_file(const Circuit& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::SchemaError, "cannot open \"" + path + "\" for writing");
    out << circuit_to_json(c).dump(2) << "\n";
}

Circuit read_circuit_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SchemaError, "cannot open \"" + path + "\"");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::SchemaError, std::string("invalid JSON: ") + e.what());
    }
    return circuit_from_json(j);
}

}  // namespace rca
