#include "zkdesk/circuit.hpp"

#include <cstdlib>

namespace zkdesk {

uint32_t budget_bits() {
    if (const char* env = std::getenv("ZK_BUDGET_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && v > 0 && v <= 62) return static_cast<uint32_t>(v);
    }
    return kDefaultBudgetBits;
}

const char* gate_op_name(GateOp op) {
    switch (op) {
        case GateOp::And: return "AND";
        case GateOp::Or: return "OR";
        case GateOp::Xor: return "XOR";
        case GateOp::Not: return "NOT";
        case GateOp::Const0: return "CONST0";
        case GateOp::Const1: return "CONST1";
    }
    return "?";
}

uint32_t gate_op_arity(GateOp op) {
    switch (op) {
        case GateOp::And:
        case GateOp::Or:
        case GateOp::Xor: return 2;
        case GateOp::Not: return 1;
        case GateOp::Const0:
        case GateOp::Const1: return 0;
    }
    return 0;
}

namespace {

bool ref_ok(const WireRef& r, uint32_t n_inputs, uint32_t gate_limit) {
    if (r.kind == WireRef::Kind::Input) return r.index < n_inputs;
    return r.index < gate_limit;
}

} // namespace

ValidationReport validate(const Circuit& c) {
    ValidationReport rep;
    auto flag = [&rep](std::string msg, std::string loc) {
        rep.violations.push_back({std::move(msg), std::move(loc)});
    };
    for (uint32_t k = 0; k < c.gates.size(); ++k) {
        const Gate& g = c.gates[k];
        const std::string loc = "g" + std::to_string(k);
        const uint32_t arity = gate_op_arity(g.op);
        if (arity >= 1) {
            if (g.a.kind == WireRef::Kind::Gate && g.a.index >= k)
                flag("forward reference", loc);
            else if (!ref_ok(g.a, c.n_inputs, k))
                flag("unresolved argument", loc);
        }
        if (arity == 2) {
            if (g.b.kind == WireRef::Kind::Gate && g.b.index >= k)
                flag("forward reference", loc);
            else if (!ref_ok(g.b, c.n_inputs, k))
                flag("unresolved argument", loc);
        }
    }
    if (c.outputs.empty()) flag("no outputs (m must be >= 1)", "OUT");
    for (uint32_t i = 0; i < c.outputs.size(); ++i) {
        if (!ref_ok(c.outputs[i], c.n_inputs, static_cast<uint32_t>(c.gates.size())))
            flag("unresolved output", "OUT[" + std::to_string(i) + "]");
    }
    return rep;
}

std::string ValidationReport::summary() const {
    if (ok()) return "OK";
    std::string s;
    for (const auto& v : violations) {
        if (!s.empty()) s += "; ";
        s += v.location + ": " + v.message;
    }
    return s;
}

void require_valid(const Circuit& c) {
    ValidationReport rep = validate(c);
    if (!rep.ok()) throw PreconditionError("invalid circuit: " + rep.summary());
}

std::vector<uint8_t> Circuit::evaluate(const std::vector<uint8_t>& in) const {
    if (in.size() != n_inputs)
        throw PreconditionError("evaluate: expected " + std::to_string(n_inputs) +
                                " input bits, got " + std::to_string(in.size()));
    std::vector<uint8_t> wire(gates.size());
    auto read = [&](const WireRef& r) -> uint8_t {
        return r.kind == WireRef::Kind::Input ? in[r.index] : wire[r.index];
    };
    for (size_t k = 0; k < gates.size(); ++k) {
        const Gate& g = gates[k];
        switch (g.op) {
            case GateOp::And: wire[k] = read(g.a) & read(g.b); break;
            case GateOp::Or: wire[k] = read(g.a) | read(g.b); break;
            case GateOp::Xor: wire[k] = read(g.a) ^ read(g.b); break;
            case GateOp::Not: wire[k] = read(g.a) ^ 1u; break;
            case GateOp::Const0: wire[k] = 0; break;
            case GateOp::Const1: wire[k] = 1; break;
        }
    }
    std::vector<uint8_t> out(outputs.size());
    for (size_t i = 0; i < outputs.size(); ++i) out[i] = read(outputs[i]);
    return out;
}

uint64_t Circuit::evaluate_u64(uint64_t in) const {
    std::vector<uint8_t> bits(n_inputs);
    for (uint32_t i = 0; i < n_inputs; ++i) bits[i] = (in >> i) & 1u;
    std::vector<uint8_t> out = evaluate(bits);
    uint64_t packed = 0;
    for (size_t i = 0; i < out.size(); ++i)
        if (out[i]) packed |= uint64_t(1) << i;
    return packed;
}

void Circuit::evaluate_block(uint64_t base, std::vector<uint64_t>& out_words) const {
    // Lane j carries assignment base+j. Input bit i is a fixed 64-bit pattern
    // for i < 6 and a block constant for i >= 6 (base is 64-aligned).
    static constexpr uint64_t kLanePattern[6] = {
        0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
        0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
    std::vector<uint64_t> wire(gates.size());
    auto read = [&](const WireRef& r) -> uint64_t {
        if (r.kind == WireRef::Kind::Gate) return wire[r.index];
        if (r.index < 6) return kLanePattern[r.index];
        return (base >> r.index) & 1u ? ~uint64_t(0) : 0;
    };
    for (size_t k = 0; k < gates.size(); ++k) {
        const Gate& g = gates[k];
        switch (g.op) {
            case GateOp::And: wire[k] = read(g.a) & read(g.b); break;
            case GateOp::Or: wire[k] = read(g.a) | read(g.b); break;
            case GateOp::Xor: wire[k] = read(g.a) ^ read(g.b); break;
            case GateOp::Not: wire[k] = ~read(g.a); break;
            case GateOp::Const0: wire[k] = 0; break;
            case GateOp::Const1: wire[k] = ~uint64_t(0); break;
        }
    }
    out_words.assign(outputs.size(), 0);
    for (size_t i = 0; i < outputs.size(); ++i) out_words[i] = read(outputs[i]);
}

Circuit identity_circuit(uint32_t m) {
    Circuit c;
    c.n_inputs = m;
    c.outputs.reserve(m);
    for (uint32_t i = 0; i < m; ++i) c.outputs.push_back(WireRef::input(i));
    return c;
}

Circuit constant_circuit(const std::vector<uint8_t>& bits) {
    Circuit c;
    c.n_inputs = 0;
    for (uint8_t b : bits) {
        c.gates.push_back({b ? GateOp::Const1 : GateOp::Const0, {}, {}});
        c.outputs.push_back(WireRef::gate(static_cast<uint32_t>(c.gates.size() - 1)));
    }
    return c;
}

} // namespace zkdesk
