#include "zkdesk/reduce.hpp"

#include "zkdesk/build.hpp"
#include "zkdesk/hash.hpp"
#include "zkdesk/report.hpp"

#include <algorithm>
#include <cmath>

namespace zkdesk {

const char* problem_name(Problem p) {
    switch (p) {
        case Problem::SD: return "SD";
        case Problem::IID: return "IID";
        case Problem::MutIID: return "mut-IID";
        case Problem::EA: return "EA";
        case Problem::EABar: return "EA-bar";
        case Problem::EDBar: return "ED-bar";
    }
    return "?";
}

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Yes: return "yes";
        case Regime::No: return "no";
        case Regime::Unknown: return "unknown";
    }
    return "?";
}

EaBarResult ea_bar_to_iid(const Circuit& x, uint32_t t, uint32_t s, uint32_t k, uint32_t budget) {
    require_valid(x);
    const uint32_t m = x.n_inputs;
    if (m < 2) throw PreconditionError("entropy threshold needs an input size of at least 2");
    if (t == 0 || t >= m) throw PreconditionError("threshold t must satisfy 0 < t < m");
    if (s < 1) throw PreconditionError("copy count s must be at least 1");

    const uint32_t m_prime = s * m;
    const uint32_t st = s * t;
    const uint32_t hash_in = m_prime + st;
    const uint32_t hash_out = m_prime;
    const uint32_t desc = hash_in + hash_out - 1 + hash_out;

    Circuit xs = tensor_power(x, s);

    // Z = X' (x) I: sample x' and pass a fresh uniform hash description and
    // hash value straight through.
    Circuit z;
    z.n_inputs = m_prime + desc + m_prime;
    {
        auto xo = embed(z, xs, input_range(0, m_prime));
        z.outputs = std::move(xo);
        for (const WireRef& r : input_range(m_prime, desc)) z.outputs.push_back(r);
        for (const WireRef& r : input_range(m_prime + desc, m_prime)) z.outputs.push_back(r);
    }

    // Z' : (x, (h, h(r, u))) with the same output layout.
    Circuit zp;
    zp.n_inputs = m_prime + st + desc;
    {
        auto xo = embed(zp, xs, input_range(0, m_prime));
        zp.outputs = std::move(xo);
        Circuit hf = hash_family_circuit(hash_in, hash_out);
        std::vector<WireRef> hf_in = input_range(0, m_prime + st); // v = (r, u)
        for (const WireRef& r : input_range(m_prime + st, desc)) hf_in.push_back(r);
        auto hashed = embed(zp, hf, hf_in); // (diag, offset, h(v))
        zp.outputs.insert(zp.outputs.end(), hashed.begin(), hashed.end());
    }

    const uint32_t need = std::max(z.n_inputs, zp.n_inputs);
    if (need > budget)
        throw BudgetExceeded("hashed pair needs " + std::to_string(need) +
                             " input bits, budget is " + std::to_string(budget));

    EaBarResult res;
    res.pair.x = std::move(z);
    res.pair.y = std::move(zp);
    res.pair.problem = Problem::IID;
    res.pair.t = static_cast<int>(t);

    const double delta_flat = 2.0 * std::sqrt(double(k)) * double(m) * double(m);
    res.trace.reduction = "ea_bar_to_iid";
    res.trace.params = {{"m", m},
                        {"s", s},
                        {"t", t},
                        {"k", k},
                        {"m_prime", m_prime},
                        {"hash_in", hash_in},
                        {"hash_out", hash_out},
                        {"hash_desc_bits", desc},
                        {"flatness_delta", delta_flat},
                        {"typicality_slack", std::sqrt(double(k)) * delta_flat}};

    // Regime certification straight from the entropy when X is enumerable.
    if (m <= std::min(budget, budget_bits())) {
        double h = shannon_entropy(enumerate_dist(x, budget));
        res.trace.measured["entropy_x"] = h;
        if (h <= double(t) - 1.0) {
            res.pair.regime = Regime::Yes;
            res.pair.certificate = "H(X) = " + std::to_string(h) + " <= t - 1";
        } else if (h >= double(t) + 1.0) {
            res.pair.regime = Regime::No;
            res.pair.certificate = "H(X) = " + std::to_string(h) + " >= t + 1";
        }
    }
    return res;
}

PromisePair iid_to_mut_iid(const Circuit& x0, const Circuit& x1) {
    require_valid(x0);
    require_valid(x1);
    if (x0.width() != x1.width()) throw PreconditionError("iid_to_mut_iid: width mismatch");
    const uint32_t block = std::max(x0.n_inputs, x1.n_inputs);

    auto build = [&](bool flip) {
        Circuit c;
        c.n_inputs = 1 + block;
        WireRef b = WireRef::input(0);
        auto o0 = embed(c, x0, input_range(1, x0.n_inputs));
        auto o1 = embed(c, x1, input_range(1, x1.n_inputs));
        c.outputs = mux_bits(c, b, o0, o1);
        c.outputs.push_back(flip ? not_of(c, b) : b);
        return c;
    };

    PromisePair out;
    out.x = build(false);
    out.y = build(true);
    out.problem = Problem::MutIID;
    return out;
}

namespace {

Regime combine_and(const std::vector<Regime>& regimes) {
    bool all_yes = true;
    for (Regime r : regimes) {
        if (r == Regime::No) return Regime::No;
        if (r != Regime::Yes) all_yes = false;
    }
    return all_yes ? Regime::Yes : Regime::Unknown;
}

Regime combine_or(Regime a, Regime b) {
    if (a == Regime::Yes || b == Regime::Yes) return Regime::Yes;
    if (a == Regime::No && b == Regime::No) return Regime::No;
    return Regime::Unknown;
}

} // namespace

PromisePair and_closure(const std::vector<PromisePair>& pairs) {
    if (pairs.empty()) throw PreconditionError("and_closure needs at least one pair");
    PromisePair out;
    out.x = pairs[0].x;
    out.y = pairs[0].y;
    std::vector<Regime> regimes{pairs[0].regime};
    for (size_t i = 1; i < pairs.size(); ++i) {
        out.x = tensor(out.x, pairs[i].x);
        out.y = tensor(out.y, pairs[i].y);
        regimes.push_back(pairs[i].regime);
    }
    out.problem = Problem::MutIID;
    out.regime = combine_and(regimes);
    if (out.regime != Regime::Unknown)
        out.certificate = "combined from labelled sub-instances (sum / max laws)";
    return out;
}

PromisePair or_closure(const PromisePair& p0, const PromisePair& p1) {
    CircuitPair ab = or_xor_pair(p0.x, p0.y, p1.x, p1.y);
    PromisePair out;
    out.x = std::move(ab.a);
    out.y = std::move(ab.b);
    out.problem = Problem::MutIID;
    out.regime = combine_or(p0.regime, p1.regime);
    if (out.regime != Regime::Unknown)
        out.certificate = "combined from labelled sub-instances (product laws)";
    return out;
}

std::vector<EdBarSkeleton> ed_bar_decompose(const Circuit& x, const Circuit& y,
                                            bool pre_tripled) {
    require_valid(x);
    require_valid(y);
    Circuit x3 = pre_tripled ? x : tensor_power(x, 3);
    Circuit y3 = pre_tripled ? y : tensor_power(y, 3);
    if (x3.width() != y3.width())
        throw PreconditionError("entropy-difference decomposition needs equal output widths");
    std::vector<EdBarSkeleton> out;
    const uint32_t n = x3.width();
    out.reserve(n);
    for (uint32_t t = 1; t <= n; ++t) out.push_back({x3, y3, t});
    return out;
}

EdBarAssembly ed_bar_assemble(const Circuit& x, const Circuit& y, const EaSideReduction& ea_side,
                              uint32_t s, uint32_t k, bool pre_tripled) {
    if (!ea_side)
        throw PreconditionError("pluggable dependency absent: supply an EA-side reduction");
    auto skeletons = ed_bar_decompose(x, y, pre_tripled);

    EdBarAssembly res;
    res.trace.reduction = "ed_bar_assemble";
    res.trace.params = {{"s", s}, {"k", k}, {"thresholds", skeletons.size()}};
    nlohmann::ordered_json per_t = nlohmann::ordered_json::array();

    std::vector<PromisePair> per_threshold;
    for (const EdBarSkeleton& sk : skeletons) {
        PromisePair mut_bar;
        if (sk.t >= sk.x_tripled.n_inputs) {
            // thresholds at or above the input size cannot go through the
            // hashing construction (and H never exceeds the input size), so
            // the side resolves directly from the entropy when enumerable
            mut_bar.x = constant_circuit({0});
            mut_bar.y = constant_circuit({0});
            mut_bar.problem = Problem::MutIID;
            if (sk.x_tripled.n_inputs <= budget_bits()) {
                double h = shannon_entropy(enumerate_dist(sk.x_tripled));
                if (h <= double(sk.t) - 1.0) {
                    mut_bar.regime = Regime::Yes;
                    mut_bar.certificate = "resolved directly: H <= t - 1";
                } else if (h >= double(sk.t) + 1.0) {
                    mut_bar.y = constant_circuit({1});
                    mut_bar.regime = Regime::No;
                    mut_bar.certificate = "resolved directly: H >= t + 1";
                }
            }
        } else {
            // structural construction; measurement stays with the caller
            EaBarResult ea_bar = ea_bar_to_iid(sk.x_tripled, sk.t, s, k, 4096);
            mut_bar = iid_to_mut_iid(ea_bar.pair.x, ea_bar.pair.y);
            mut_bar.regime = ea_bar.pair.regime;
            mut_bar.certificate = ea_bar.pair.certificate;
        }

        PromisePair ea = ea_side(sk.y_tripled, sk.t);
        if (ea.problem != Problem::MutIID)
            throw PreconditionError("EA-side reduction must produce a mut-IID pair");

        PromisePair or_t = or_closure(mut_bar, ea);
        per_t.push_back({{"t", sk.t},
                         {"ea_bar_regime", regime_name(mut_bar.regime)},
                         {"ea_regime", regime_name(ea.regime)},
                         {"or_regime", regime_name(or_t.regime)}});
        per_threshold.push_back(std::move(or_t));
    }

    res.pair = and_closure(per_threshold);
    res.pair.problem = Problem::MutIID;
    res.trace.measured["per_threshold"] = std::move(per_t);
    res.trace.measured["final_regime"] = regime_name(res.pair.regime);
    return res;
}

namespace {

// 1 iff at least `threshold` of the given bits are set (unary counter).
WireRef at_least(Circuit& c, const std::vector<WireRef>& bits, uint32_t threshold) {
    if (threshold == 0) return const1(c);
    std::vector<WireRef> ge(threshold + 1);
    ge[0] = const1(c);
    for (uint32_t j = 1; j <= threshold; ++j) ge[j] = const0(c);
    for (const WireRef& a : bits) {
        for (uint32_t j = threshold; j >= 1; --j) {
            WireRef carry = add_gate(c, GateOp::And, ge[j - 1], a);
            ge[j] = add_gate(c, GateOp::Or, ge[j], carry);
        }
    }
    return ge[threshold];
}

} // namespace

ProtocolToIidResult protocol_to_iid(const ProtocolSpec& spec, uint32_t k,
                                    uint32_t sim_shared_bits) {
    if (k % 2 == 0) throw PreconditionError("repetition count k must be odd");
    if (sim_shared_bits > spec.simulator.n_inputs)
        throw PreconditionError("shared coin split exceeds the simulator's inputs");
    const uint32_t noise_bits = spec.simulator.n_inputs - sim_shared_bits;
    const uint32_t m = spec.help_bits;

    ProtocolToIidResult res;

    // D0: the Dealer's help, tagged "00" (real).
    {
        Circuit d0;
        d0.n_inputs = spec.dealer.n_inputs;
        d0.outputs = embed(d0, spec.dealer, input_range(0, spec.dealer.n_inputs));
        d0.outputs.push_back(const0(d0));
        d0.outputs.push_back(const0(d0));
        res.d0 = ProbabilisticCircuit{std::move(d0), spec.dealer.n_inputs};
    }

    // D1: k simulator runs on shared coins + fresh noise, verifier on each,
    // majority filter; bottom ("10" tag) on reject.
    {
        Circuit d1;
        d1.n_inputs = sim_shared_bits + k * noise_bits;
        auto shared = input_range(0, sim_shared_bits);

        std::vector<WireRef> first_help;
        std::vector<WireRef> accepts;
        for (uint32_t i = 0; i < k; ++i) {
            std::vector<WireRef> sim_in = shared;
            auto noise = input_range(sim_shared_bits + i * noise_bits, noise_bits);
            sim_in.insert(sim_in.end(), noise.begin(), noise.end());
            auto view = embed(d1, spec.simulator, sim_in);
            if (i == 0) first_help.assign(view.begin(), view.begin() + m);
            accepts.push_back(embed(d1, spec.verifier, view)[0]);
        }
        WireRef majority = at_least(d1, accepts, (k + 1) / 2);
        for (uint32_t j = 0; j < m; ++j)
            d1.outputs.push_back(add_gate(d1, GateOp::And, majority, first_help[j]));
        d1.outputs.push_back(not_of(d1, majority)); // tag "10" marks bottom
        d1.outputs.push_back(const0(d1));
        res.d1 = ProbabilisticCircuit{std::move(d1), sim_shared_bits};
    }

    res.trace.reduction = "protocol_to_iid";
    res.trace.params = {{"k", k},
                        {"sim_shared_bits", sim_shared_bits},
                        {"sim_noise_bits", noise_bits},
                        {"help_bits", m}};
    return res;
}

} // namespace zkdesk
