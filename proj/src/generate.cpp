#include "zkdesk/generate.hpp"

#include "zkdesk/build.hpp"
#include "zkdesk/report.hpp"

namespace zkdesk {

Circuit random_circuit(Rng& rng, uint32_t n_inputs, uint32_t n_gates, uint32_t width) {
    Circuit c;
    c.n_inputs = n_inputs;
    auto pick_ref = [&](uint32_t gate_limit) -> WireRef {
        uint32_t total = n_inputs + gate_limit;
        uint32_t i = static_cast<uint32_t>(rng() % total);
        return i < n_inputs ? WireRef::input(i) : WireRef::gate(i - n_inputs);
    };
    for (uint32_t k = 0; k < n_gates; ++k) {
        GateOp op = static_cast<GateOp>(rng() % 4); // AND/OR/XOR/NOT
        if (n_inputs == 0 && k == 0) op = (rng() & 1) ? GateOp::Const1 : GateOp::Const0;
        c.gates.push_back({op, pick_ref(k), pick_ref(k)});
    }
    for (uint32_t i = 0; i < width; ++i) {
        uint32_t total = n_inputs + static_cast<uint32_t>(c.gates.size());
        uint32_t r = static_cast<uint32_t>(rng() % total);
        c.outputs.push_back(r < n_inputs ? WireRef::input(r) : WireRef::gate(r - n_inputs));
    }
    return c;
}

namespace {

// X = (selector < s ? branch : body) over shared body inputs; the selector
// coins are dedicated inputs so the branch mass is exactly s/2^sel_bits.
Circuit sliced_circuit(const Circuit& body, const Circuit& branch, uint32_t sel_bits, uint64_t s) {
    if (body.width() != branch.width()) throw PreconditionError("slice: width mismatch");
    Circuit c;
    const uint32_t nb = std::max(body.n_inputs, branch.n_inputs);
    c.n_inputs = sel_bits + nb;
    auto sel = input_range(0, sel_bits);
    auto body_in = input_range(sel_bits, body.n_inputs);
    auto branch_in = input_range(sel_bits, branch.n_inputs);
    auto body_out = embed(c, body, body_in);
    auto branch_out = embed(c, branch, branch_in);
    WireRef in_slice = less_than_const(c, sel, s);
    c.outputs = mux_bits(c, in_slice, body_out, branch_out);
    return c;
}

// body with two constant top bits appended
Circuit tagged_body(Rng& rng, uint32_t body_bits, uint32_t payload, uint8_t tag_hi,
                    uint8_t tag_lo) {
    Circuit base = random_circuit(rng, body_bits, 3 * payload + 4, payload);
    Circuit c;
    c.n_inputs = body_bits;
    c.outputs = embed(c, base, input_range(0, body_bits));
    c.outputs.push_back(tag_hi ? const1(c) : const0(c));
    c.outputs.push_back(tag_lo ? const1(c) : const0(c));
    return c;
}

uint64_t dyadic_numerator(const Rational& p, uint32_t bits, const char* what) {
    Rational scaled = p * Rational(BigInt(1) << bits);
    if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0 ||
        scaled > Rational(BigInt(1) << bits))
        throw PreconditionError(std::string(what) + " must be a dyadic in [0,1] with " +
                                std::to_string(bits) + " bits");
    return boost::multiprecision::numerator(scaled).convert_to<uint64_t>();
}

} // namespace

GeneratedPair generate_yes_iid(Rng& rng, uint32_t body_bits, uint32_t width,
                               const Rational& target_sd, uint32_t budget) {
    if (width < 1) throw PreconditionError("width must be at least 1");
    if (target_sd < 0 || target_sd > 1)
        throw PreconditionError("target SD must lie in [0,1]");
    const uint32_t sel_bits = 4;

    // branch masses px + py <= target
    Rational half_target = target_sd / 2;
    uint64_t smax = dyadic_numerator(snap_to_dyadic(half_target, sel_bits) <= half_target
                                         ? snap_to_dyadic(half_target, sel_bits)
                                         : snap_to_dyadic(half_target, sel_bits) -
                                               Rational(1, BigInt(1) << sel_bits),
                                     sel_bits, "slice mass");
    uint64_t sx = smax == 0 ? 0 : rng() % (smax + 1);
    uint64_t sy = smax == 0 ? 0 : rng() % (smax + 1);

    Circuit shared = random_circuit(rng, body_bits, 3 * width + 4, width);
    Circuit dx = random_circuit(rng, body_bits, 2 * width + 2, width);
    Circuit dy = random_circuit(rng, body_bits, 2 * width + 2, width);

    GeneratedPair out;
    out.pair.x = sliced_circuit(shared, dx, sel_bits, sx);
    out.pair.y = sliced_circuit(shared, dy, sel_bits, sy);
    out.pair.problem = Problem::IID;
    out.pair.a = target_sd;

    Rational sd = statistical_difference(enumerate_dist(out.pair.x, budget),
                                         enumerate_dist(out.pair.y, budget));
    if (sd > target_sd) throw PreconditionError("generator invariant violated: SD above target");
    out.pair.regime = Regime::Yes;
    out.pair.certificate = "SD = " + to_string(sd) + " <= " + to_string(target_sd);
    out.certificate = {{"kind", "yes-IID"},
                       {"target_sd", rational_json(target_sd)},
                       {"sd", rational_json(sd)},
                       {"slice_x", sx},
                       {"slice_y", sy},
                       {"sel_bits", sel_bits}};
    return out;
}

GeneratedPair generate_no_iid(Rng& rng, uint32_t body_bits, uint32_t width, const Rational& px,
                              const Rational& py, uint32_t budget) {
    if (width < 3)
        throw PreconditionError("no-instance generator needs width >= 3 for the value blocks");
    const uint32_t sel_bits = 4;
    const uint32_t payload = width - 2;
    uint64_t sx = dyadic_numerator(px, sel_bits, "px");
    uint64_t sy = dyadic_numerator(py, sel_bits, "py");

    // shared overlap block "00", private blocks "10" (X side) and "11" (Y side)
    Circuit shared = tagged_body(rng, body_bits, payload, 0, 0);
    Circuit dx = tagged_body(rng, body_bits, payload, 1, 0);
    Circuit dy = tagged_body(rng, body_bits, payload, 1, 1);

    GeneratedPair out;
    out.pair.x = sliced_circuit(shared, dx, sel_bits, sx);
    out.pair.y = sliced_circuit(shared, dy, sel_bits, sy);
    out.pair.problem = Problem::MutIID;

    ExactDist dxd = enumerate_dist(out.pair.x, budget);
    ExactDist dyd = enumerate_dist(out.pair.y, budget);
    Rational mut = mutual_disjointness(dxd, dyd);
    out.pair.b = mut;
    out.pair.regime = Regime::No;
    out.pair.certificate = "mut-Disj = " + to_string(mut) + " by enumeration";
    out.certificate = {{"kind", "no-IID"},
                       {"px", rational_json(px)},
                       {"py", rational_json(py)},
                       {"mut_disj", rational_json(mut)},
                       {"disj_xy", rational_json(disjointness(dxd, dyd))},
                       {"disj_yx", rational_json(disjointness(dyd, dxd))}};
    return out;
}

GeneratedEa generate_ea_instance(Rng& rng, EaKind kind, uint32_t m_inputs, uint32_t width,
                                 uint32_t j, uint32_t budget) {
    GeneratedEa out;
    Circuit c;
    switch (kind) {
        case EaKind::Point: {
            c.n_inputs = m_inputs;
            for (uint32_t i = 0; i < width; ++i) {
                bool bit = rng() & 1;
                c.gates.push_back({bit ? GateOp::Const1 : GateOp::Const0, {}, {}});
                c.outputs.push_back(WireRef::gate(static_cast<uint32_t>(c.gates.size() - 1)));
            }
            break;
        }
        case EaKind::UniformRange: {
            if (j > m_inputs || j > width)
                throw PreconditionError("uniform range j must fit the input and output widths");
            // triangular XOR mixing keeps the input map bijective, so the
            // projection onto j wires stays uniform over 2^j values
            c.n_inputs = m_inputs;
            std::vector<WireRef> mixed;
            for (uint32_t i = 0; i < m_inputs; ++i) {
                if (i + 1 < m_inputs)
                    mixed.push_back(
                        add_gate(c, GateOp::Xor, WireRef::input(i), WireRef::input(i + 1)));
                else
                    mixed.push_back(WireRef::input(i));
            }
            for (uint32_t i = 0; i < j; ++i) c.outputs.push_back(mixed[i]);
            for (uint32_t i = j; i < width; ++i) {
                bool bit = rng() & 1;
                c.gates.push_back({bit ? GateOp::Const1 : GateOp::Const0, {}, {}});
                c.outputs.push_back(WireRef::gate(static_cast<uint32_t>(c.gates.size() - 1)));
            }
            break;
        }
        case EaKind::Mixed:
            c = random_circuit(rng, m_inputs, 3 * width + 4, width);
            break;
    }
    out.x = std::move(c);
    out.entropy = shannon_entropy(enumerate_dist(out.x, budget));
    out.certificate = {{"kind", "ea-instance"},
                       {"m_inputs", m_inputs},
                       {"width", width},
                       {"entropy", out.entropy}};
    return out;
}

} // namespace zkdesk
