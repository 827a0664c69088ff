#include "zkdesk/protocol.hpp"

#include "zkdesk/build.hpp"

#include <unordered_map>

namespace zkdesk {

namespace {

// Equality comparator between a block of primary inputs and embedded wires.
WireRef equal_bits(Circuit& c, const std::vector<WireRef>& lhs, const std::vector<WireRef>& rhs) {
    WireRef acc = const1(c);
    for (size_t i = 0; i < lhs.size(); ++i) {
        WireRef diff = add_gate(c, GateOp::Xor, lhs[i], rhs[i]);
        acc = add_gate(c, GateOp::And, acc, not_of(c, diff));
    }
    return acc;
}

std::unordered_map<uint64_t, std::vector<uint64_t>> preimage_map(const Circuit& y,
                                                                 uint32_t budget) {
    require_valid(y);
    if (y.n_inputs > budget)
        throw BudgetExceeded("prover inversion over " + std::to_string(y.n_inputs) +
                             " input bits exceeds budget " + std::to_string(budget));
    std::unordered_map<uint64_t, std::vector<uint64_t>> map;
    for (uint64_t r = 0; r < (uint64_t(1) << y.n_inputs); ++r)
        map[y.evaluate_u64(r)].push_back(r);
    return map;
}

// view key packing: help | abort << m | message << (m + 1)
uint64_t pack_view(uint64_t help, bool abort, uint64_t message, uint32_t help_bits) {
    return help | (uint64_t(abort) << help_bits) | (message << (help_bits + 1));
}

ExactDist dist_from_masses(uint32_t width, const std::map<uint64_t, Rational>& masses) {
    BigInt den = 1;
    for (const auto& [k, m] : masses)
        den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(m));
    ExactDist d;
    d.width = width;
    d.den = den;
    for (const auto& [k, m] : masses) {
        if (m == 0) continue;
        d.num[k] = boost::multiprecision::numerator(m) *
                   (den / boost::multiprecision::denominator(m));
    }
    return d;
}

} // namespace

ProtocolSpec build_iid_protocol(const Circuit& x_polarized, const Circuit& y_polarized,
                                uint32_t budget) {
    require_valid(x_polarized);
    require_valid(y_polarized);
    if (x_polarized.width() != y_polarized.width())
        throw PreconditionError("protocol: pair members must share a width");

    ProtocolSpec spec;
    spec.help_bits = x_polarized.width();
    spec.message_bits = y_polarized.n_inputs;
    spec.dealer = x_polarized;
    spec.preimage = y_polarized;
    if (y_polarized.n_inputs > budget)
        throw BudgetExceeded("prover inversion space exceeds budget");
    if (spec.view_width() > 62)
        throw BudgetExceeded("view wider than the packed evaluation limit");

    // verifier: inputs [help][abort][r]; accepts iff not abort and Y'(r) = help
    {
        Circuit v;
        const uint32_t m = spec.help_bits;
        v.n_inputs = m + 1 + spec.message_bits;
        auto help = input_range(0, m);
        WireRef abort = WireRef::input(m);
        auto y_out = embed(v, y_polarized, input_range(m + 1, spec.message_bits));
        WireRef eq = equal_bits(v, help, y_out);
        v.outputs.push_back(add_gate(v, GateOp::And, eq, not_of(v, abort)));
        spec.verifier = std::move(v);
    }

    // simulator: r uniform, view = (Y'(r), abort=0, r)
    {
        Circuit s;
        s.n_inputs = spec.message_bits;
        auto y_out = embed(s, y_polarized, input_range(0, spec.message_bits));
        s.outputs = y_out;
        s.outputs.push_back(const0(s));
        for (uint32_t i = 0; i < spec.message_bits; ++i) s.outputs.push_back(WireRef::input(i));
        spec.simulator = std::move(s);
    }
    return spec;
}

ExactDist real_view_dist(const ProtocolSpec& spec, uint32_t budget) {
    ExactDist help_dist = enumerate_dist(spec.dealer, budget);
    auto preimages = preimage_map(spec.preimage, budget);

    std::map<uint64_t, Rational> view;
    for (const auto& [help, cnt] : help_dist.num) {
        Rational mass(cnt, help_dist.den);
        auto it = preimages.find(help);
        if (it == preimages.end() || it->second.empty()) {
            view[pack_view(help, true, 0, spec.help_bits)] += mass;
        } else {
            // honest prover: uniform over the preimage set
            Rational each = mass / Rational(BigInt(it->second.size()));
            for (uint64_t r : it->second)
                view[pack_view(help, false, r, spec.help_bits)] += each;
        }
    }
    return dist_from_masses(spec.view_width(), view);
}

ExactDist simulated_view_dist(const ProtocolSpec& spec, uint32_t budget) {
    ExactDist d = enumerate_dist(spec.simulator, budget);
    if (d.width != spec.view_width())
        throw PreconditionError("simulator width does not match the view layout");
    return d;
}

ProtocolReport measure(const ProtocolSpec& spec, uint32_t budget) {
    ExactDist help_dist = enumerate_dist(spec.dealer, budget);
    auto preimages = preimage_map(spec.preimage, budget);
    if (spec.message_bits + 1 > budget)
        throw BudgetExceeded("cheating-prover message enumeration exceeds budget");

    ProtocolReport rep;
    rep.completeness = 0;
    rep.soundness = 0;
    rep.abort_mass = 0;

    for (const auto& [help, cnt] : help_dist.num) {
        Rational mass(cnt, help_dist.den);
        auto it = preimages.find(help);
        if (it != preimages.end() && !it->second.empty())
            rep.completeness += mass;
        else
            rep.abort_mass += mass;

        // optimal cheating prover: enumerate every (abort, message) response
        bool accept_any = false;
        for (uint64_t msg = 0; msg < (uint64_t(1) << (spec.message_bits + 1)) && !accept_any;
             ++msg) {
            uint64_t in = help | (msg << spec.help_bits);
            accept_any = spec.verifier.evaluate_u64(in) != 0;
        }
        if (accept_any) rep.soundness += mass;
    }

    rep.deviation = statistical_difference(real_view_dist(spec, budget),
                                           simulated_view_dist(spec, budget));
    return rep;
}

ProtocolRun run_protocol_once(const ProtocolSpec& spec, std::mt19937_64& rng,
                              const std::optional<ProverStrategy>& strategy, uint32_t budget) {
    ProtocolRun run;
    const uint64_t dealer_mask =
        spec.dealer.n_inputs >= 64 ? ~uint64_t(0) : (uint64_t(1) << spec.dealer.n_inputs) - 1;
    run.help = spec.dealer.evaluate_u64(rng() & dealer_mask);

    if (strategy) {
        auto [abort, msg] = (*strategy)(run.help);
        run.aborted = abort;
        run.message = msg;
    } else {
        auto preimages = preimage_map(spec.preimage, budget);
        auto it = preimages.find(run.help);
        if (it == preimages.end() || it->second.empty()) {
            run.aborted = true;
        } else {
            run.message = it->second[rng() % it->second.size()];
        }
    }

    uint64_t vin = run.help | (uint64_t(run.aborted) << spec.help_bits) |
                   (run.message << (spec.help_bits + 1));
    run.accepted = spec.verifier.evaluate_u64(vin) != 0;

    const uint64_t sim_mask =
        spec.simulator.n_inputs >= 64 ? ~uint64_t(0) : (uint64_t(1) << spec.simulator.n_inputs) - 1;
    run.simulated_view = spec.simulator.evaluate_u64(rng() & sim_mask);
    return run;
}

} // namespace zkdesk
