#include "zkdesk/ckt_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace zkdesk {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) toks.push_back(t);
    return toks;
}

uint32_t parse_index(const std::string& tok, size_t from, uint32_t line) {
    uint32_t v = 0;
    const char* first = tok.data() + from;
    const char* last = tok.data() + tok.size();
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw ParseError(line, "bad index in '" + tok + "'");
    return v;
}

WireRef parse_ref(const std::string& tok, uint32_t line) {
    if (tok.size() < 2) throw ParseError(line, "bad wire reference '" + tok + "'");
    if (tok[0] == 'i') return WireRef::input(parse_index(tok, 1, line));
    if (tok[0] == 'g') return WireRef::gate(parse_index(tok, 1, line));
    throw ParseError(line, "bad wire reference '" + tok + "'");
}

GateOp parse_op(const std::string& tok, uint32_t line) {
    if (tok == "AND") return GateOp::And;
    if (tok == "OR") return GateOp::Or;
    if (tok == "XOR") return GateOp::Xor;
    if (tok == "NOT") return GateOp::Not;
    if (tok == "CONST0") return GateOp::Const0;
    if (tok == "CONST1") return GateOp::Const1;
    throw ParseError(line, "unknown operation '" + tok + "'");
}

} // namespace

Circuit parse_ckt(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    uint32_t lineno = 0;

    auto next_line = [&](std::vector<std::string>& toks) -> bool {
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line[0] == '#') continue;
            toks = split_ws(line);
            if (!toks.empty()) return true;
        }
        return false;
    };

    std::vector<std::string> toks;
    if (!next_line(toks)) throw ParseError(1, "empty input");
    if (toks.size() != 5 || toks[0] != "CKT" || toks[1] != "v1")
        throw ParseError(lineno, "expected header 'CKT v1 <n_inputs> <n_gates> <m_outputs>'");

    Circuit c;
    c.n_inputs = parse_index(toks[2], 0, lineno);
    const uint32_t n_gates = parse_index(toks[3], 0, lineno);
    const uint32_t m_outputs = parse_index(toks[4], 0, lineno);

    c.gates.reserve(n_gates);
    for (uint32_t k = 0; k < n_gates; ++k) {
        if (!next_line(toks)) throw ParseError(lineno, "expected gate line g" + std::to_string(k));
        if (toks[0] != "g" + std::to_string(k)) {
            if (!toks[0].empty() && toks[0][0] == 'g')
                throw ParseError(lineno, "duplicate or out-of-order gate id '" + toks[0] +
                                             "' (expected g" + std::to_string(k) + ")");
            throw ParseError(lineno, "expected gate line g" + std::to_string(k));
        }
        if (toks.size() < 2) throw ParseError(lineno, "missing operation");
        Gate g;
        g.op = parse_op(toks[1], lineno);
        const uint32_t arity = gate_op_arity(g.op);
        if (toks.size() != 2 + arity)
            throw ParseError(lineno, std::string(gate_op_name(g.op)) + " takes " +
                                         std::to_string(arity) + " argument(s)");
        if (arity >= 1) g.a = parse_ref(toks[2], lineno);
        if (arity == 2) g.b = parse_ref(toks[3], lineno);
        c.gates.push_back(g);
    }

    if (!next_line(toks)) throw ParseError(lineno, "expected OUT line");
    if (toks[0] != "OUT") throw ParseError(lineno, "expected OUT line");
    if (toks.size() != 1 + m_outputs)
        throw ParseError(lineno, "OUT expects " + std::to_string(m_outputs) + " reference(s)");
    for (uint32_t i = 0; i < m_outputs; ++i)
        c.outputs.push_back(parse_ref(toks[1 + i], lineno));

    if (next_line(toks)) throw ParseError(lineno, "trailing content after OUT line");
    return c;
}

std::string serialize_ckt(const Circuit& c) {
    std::string out;
    out += "CKT v1 " + std::to_string(c.n_inputs) + " " + std::to_string(c.gates.size()) + " " +
           std::to_string(c.outputs.size()) + "\n";
    auto ref_str = [](const WireRef& r) {
        return (r.kind == WireRef::Kind::Input ? "i" : "g") + std::to_string(r.index);
    };
    for (size_t k = 0; k < c.gates.size(); ++k) {
        const Gate& g = c.gates[k];
        out += "g" + std::to_string(k) + " " + gate_op_name(g.op);
        const uint32_t arity = gate_op_arity(g.op);
        if (arity >= 1) out += " " + ref_str(g.a);
        if (arity == 2) out += " " + ref_str(g.b);
        out += "\n";
    }
    out += "OUT";
    for (const WireRef& r : c.outputs) out += " " + ref_str(r);
    out += "\n";
    return out;
}

Circuit load_ckt_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot read circuit file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_ckt(buf.str());
}

void save_ckt_file(const Circuit& c, const std::string& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw PreconditionError("cannot write circuit file: " + path);
    f << serialize_ckt(c);
}

} // namespace zkdesk
