#include "zkdesk/ops.hpp"

#include "zkdesk/build.hpp"

#include <algorithm>

namespace zkdesk {

WireRef add_gate(Circuit& dst, GateOp op, WireRef a, WireRef b) {
    dst.gates.push_back({op, a, b});
    return WireRef::gate(static_cast<uint32_t>(dst.gates.size() - 1));
}

std::vector<WireRef> embed(Circuit& dst, const Circuit& src, const std::vector<WireRef>& in_refs) {
    if (in_refs.size() != src.n_inputs)
        throw PreconditionError("embed: input ref count mismatch");
    std::vector<WireRef> gate_map(src.gates.size());
    auto remap = [&](const WireRef& r) {
        return r.kind == WireRef::Kind::Input ? in_refs[r.index] : gate_map[r.index];
    };
    for (size_t k = 0; k < src.gates.size(); ++k) {
        const Gate& g = src.gates[k];
        const uint32_t arity = gate_op_arity(g.op);
        gate_map[k] = add_gate(dst, g.op, arity >= 1 ? remap(g.a) : WireRef{},
                               arity == 2 ? remap(g.b) : WireRef{});
    }
    std::vector<WireRef> outs;
    outs.reserve(src.outputs.size());
    for (const WireRef& r : src.outputs) outs.push_back(remap(r));
    return outs;
}

std::vector<WireRef> mux_bits(Circuit& dst, WireRef sel, const std::vector<WireRef>& when0,
                              const std::vector<WireRef>& when1) {
    if (when0.size() != when1.size()) throw PreconditionError("mux: width mismatch");
    WireRef nsel = not_of(dst, sel);
    std::vector<WireRef> out;
    out.reserve(when0.size());
    for (size_t i = 0; i < when0.size(); ++i) {
        WireRef lo = add_gate(dst, GateOp::And, nsel, when0[i]);
        WireRef hi = add_gate(dst, GateOp::And, sel, when1[i]);
        out.push_back(add_gate(dst, GateOp::Or, lo, hi));
    }
    return out;
}

WireRef less_than_const(Circuit& dst, const std::vector<WireRef>& bits, uint64_t constant) {
    const uint32_t t = static_cast<uint32_t>(bits.size());
    if (constant >= (uint64_t(1) << t)) return const1(dst);
    if (constant == 0) return const0(dst);
    // scan from the most significant bit, tracking "already less" and
    // "equal so far"
    WireRef lt = const0(dst);
    WireRef eq = const1(dst);
    for (int i = static_cast<int>(t) - 1; i >= 0; --i) {
        if ((constant >> i) & 1u) {
            WireRef ni = not_of(dst, bits[i]);
            lt = add_gate(dst, GateOp::Or, lt, add_gate(dst, GateOp::And, eq, ni));
            eq = add_gate(dst, GateOp::And, eq, bits[i]);
        } else {
            eq = add_gate(dst, GateOp::And, eq, not_of(dst, bits[i]));
        }
    }
    return lt;
}

std::vector<WireRef> input_range(uint32_t first, uint32_t count) {
    std::vector<WireRef> refs;
    refs.reserve(count);
    for (uint32_t i = 0; i < count; ++i) refs.push_back(WireRef::input(first + i));
    return refs;
}

Circuit tensor(const Circuit& x, const Circuit& y) {
    require_valid(x);
    require_valid(y);
    Circuit c;
    c.n_inputs = x.n_inputs + y.n_inputs;
    auto xo = embed(c, x, input_range(0, x.n_inputs));
    auto yo = embed(c, y, input_range(x.n_inputs, y.n_inputs));
    c.outputs = std::move(xo);
    c.outputs.insert(c.outputs.end(), yo.begin(), yo.end());
    return c;
}

Circuit tensor_power(const Circuit& x, uint32_t k) {
    if (k < 1) throw PreconditionError("tensor power requires k >= 1");
    Circuit acc = x;
    for (uint32_t i = 1; i < k; ++i) acc = tensor(acc, x);
    return acc;
}

namespace {

// Shared layout for the two-pair construction: [b][block1][block2].
struct PairLayout {
    uint32_t n1, n2, w0, w1;
};

Circuit build_pair_side(const Circuit& x0, const Circuit& y0, const Circuit& x1,
                        const Circuit& y1, const PairLayout& L, bool swap_second) {
    Circuit c;
    c.n_inputs = 1 + L.n1 + L.n2;
    const WireRef b = WireRef::input(0);

    auto block1 = input_range(1, L.n1);
    auto block2 = input_range(1 + L.n1, L.n2);
    auto sub = [](const std::vector<WireRef>& v, uint32_t n) {
        return std::vector<WireRef>(v.begin(), v.begin() + n);
    };

    auto x0_out = embed(c, x0, sub(block1, x0.n_inputs));
    auto y0_out = embed(c, y0, sub(block1, y0.n_inputs));
    auto x1_out = embed(c, x1, sub(block2, x1.n_inputs));
    auto y1_out = embed(c, y1, sub(block2, y1.n_inputs));

    auto slot1 = mux_bits(c, b, x0_out, y0_out);
    auto slot2 = swap_second ? mux_bits(c, b, y1_out, x1_out) : mux_bits(c, b, x1_out, y1_out);

    c.outputs = std::move(slot1);
    c.outputs.insert(c.outputs.end(), slot2.begin(), slot2.end());
    return c;
}

} // namespace

CircuitPair or_xor_pair(const Circuit& x0, const Circuit& y0, const Circuit& x1,
                        const Circuit& y1) {
    require_valid(x0);
    require_valid(y0);
    require_valid(x1);
    require_valid(y1);
    if (x0.width() != y0.width() || x1.width() != y1.width())
        throw PreconditionError("or_xor_pair: pair members must share a width");
    PairLayout L{std::max(x0.n_inputs, y0.n_inputs), std::max(x1.n_inputs, y1.n_inputs),
                 x0.width(), x1.width()};
    CircuitPair out;
    out.a = build_pair_side(x0, y0, x1, y1, L, false);
    out.b = build_pair_side(x0, y0, x1, y1, L, true);
    out.provenance = "or_xor_pair";
    return out;
}

CircuitPair xor_pair(const Circuit& x0, const Circuit& x1) {
    if (x0.width() != x1.width()) throw PreconditionError("xor_pair: width mismatch");
    CircuitPair p = or_xor_pair(x0, x1, x0, x1);
    p.provenance = "xor_pair";
    return p;
}

CircuitPair t_operator(const Circuit& x, const Circuit& y) {
    CircuitPair uv = xor_pair(x, y);
    CircuitPair out;
    out.a = tensor(uv.a, uv.a);
    out.b = tensor(uv.b, uv.b);
    out.provenance = "t_operator";
    return out;
}

Circuit gamma_mixture(const Circuit& x, const Rational& u, uint32_t coin_bits, MixTag tag) {
    require_valid(x);
    if (u < 0 || u > 1) throw PreconditionError("mixture weight must lie in [0,1]");
    Rational scaled = u * Rational(BigInt(1) << coin_bits);
    if (boost::multiprecision::denominator(scaled) != 1)
        throw PreconditionError("mixture weight " + to_string(u) + " is not representable with " +
                                std::to_string(coin_bits) + " coin bits");
    const uint64_t s = boost::multiprecision::numerator(scaled).convert_to<uint64_t>();

    Circuit c;
    c.n_inputs = coin_bits + x.n_inputs;
    auto coins = input_range(0, coin_bits);
    auto x_out = embed(c, x, input_range(coin_bits, x.n_inputs));

    WireRef real = less_than_const(c, coins, s);
    WireRef symbol = not_of(c, real);

    c.outputs.reserve(x.width() + 2);
    for (const WireRef& o : x_out) c.outputs.push_back(add_gate(c, GateOp::And, real, o));
    c.outputs.push_back(symbol);
    c.outputs.push_back(tag == MixTag::GammaPrime ? symbol : const0(c));
    return c;
}

Circuit append_uniform(const Circuit& x, uint32_t extra_bits) {
    return tensor(x, identity_circuit(extra_bits));
}

} // namespace zkdesk
