#include "zkdesk/hash.hpp"

#include "zkdesk/build.hpp"

#include <bit>

namespace zkdesk {

uint64_t AffineHash::row_mask(uint32_t j) const {
    const uint64_t in_mask = (in_bits >= 64) ? ~uint64_t(0) : ((uint64_t(1) << in_bits) - 1);
    return (diag >> (out_bits - 1 - j)) & in_mask;
}

uint64_t AffineHash::eval(uint64_t x) const {
    uint64_t y = 0;
    for (uint32_t j = 0; j < out_bits; ++j) {
        uint64_t bit = std::popcount(row_mask(j) & x) & 1u;
        bit ^= (offset >> j) & 1u;
        y |= bit << j;
    }
    return y;
}

uint64_t AffineHash::describe() const {
    return diag | (offset << (in_bits + out_bits - 1));
}

AffineHash AffineHash::from_description(uint32_t in_bits, uint32_t out_bits, uint64_t desc) {
    AffineHash h;
    h.in_bits = in_bits;
    h.out_bits = out_bits;
    const uint32_t d = in_bits + out_bits - 1;
    h.diag = desc & ((uint64_t(1) << d) - 1);
    h.offset = (desc >> d) & ((uint64_t(1) << out_bits) - 1);
    return h;
}

Circuit hash_apply(const AffineHash& h, const Circuit& x) {
    require_valid(x);
    if (h.in_bits != x.width())
        throw PreconditionError("hash_apply: hash domain " + std::to_string(h.in_bits) +
                                " does not match circuit width " + std::to_string(x.width()));
    Circuit c;
    c.n_inputs = x.n_inputs;
    auto v = embed(c, x, input_range(0, x.n_inputs));
    for (uint32_t j = 0; j < h.out_bits; ++j) {
        const uint64_t mask = h.row_mask(j);
        WireRef acc{};
        bool have = false;
        for (uint32_t i = 0; i < h.in_bits; ++i) {
            if (!((mask >> i) & 1u)) continue;
            acc = have ? add_gate(c, GateOp::Xor, acc, v[i]) : v[i];
            have = true;
        }
        const bool off = (h.offset >> j) & 1u;
        if (!have)
            acc = off ? const1(c) : const0(c);
        else if (off)
            acc = not_of(c, acc);
        c.outputs.push_back(acc);
    }
    return c;
}

Circuit hash_family_circuit(uint32_t in_bits, uint32_t out_bits) {
    if (in_bits == 0 || out_bits == 0) throw PreconditionError("hash dimensions must be positive");
    // construction is purely structural; enumeration budgets are enforced
    // where distributions are extracted
    Circuit c;
    const uint32_t diag_bits = in_bits + out_bits - 1;
    c.n_inputs = in_bits + diag_bits + out_bits;
    auto v = input_range(0, in_bits);
    auto diag = input_range(in_bits, diag_bits);
    auto offset = input_range(in_bits + diag_bits, out_bits);

    // output layout: (diag, offset, h(v))
    for (const WireRef& r : diag) c.outputs.push_back(r);
    for (const WireRef& r : offset) c.outputs.push_back(r);
    for (uint32_t j = 0; j < out_bits; ++j) {
        WireRef acc = offset[j];
        for (uint32_t i = 0; i < in_bits; ++i) {
            WireRef term = add_gate(c, GateOp::And, diag[i + out_bits - 1 - j], v[i]);
            acc = add_gate(c, GateOp::Xor, acc, term);
        }
        c.outputs.push_back(acc);
    }
    return c;
}

} // namespace zkdesk
