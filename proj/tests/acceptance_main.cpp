// Acceptance suite: one criterion per function, each printing a single
// pass/fail line. Run with the criterion number (1-10) or no argument for
// the full battery.

#include "zkdesk/generate.hpp"
#include "zkdesk/hash.hpp"
#include "zkdesk/polarize.hpp"
#include "zkdesk/protocol.hpp"
#include "zkdesk/quantum.hpp"
#include "zkdesk/reduce.hpp"

#include "zkdesk/build.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace zkdesk;

namespace {

struct PairStats {
    Rational sd, dxy, dyx;
    Rational mut() const { return std::min(dxy, dyx); }
};

PairStats stats(const Circuit& x, const Circuit& y, uint32_t budget = 30) {
    ExactDist dx = enumerate_dist(x, budget), dy = enumerate_dist(y, budget);
    return {statistical_difference(dx, dy), disjointness(dx, dy), disjointness(dy, dx)};
}

// --- criterion 1: XOR lemma exactness -------------------------------------

bool criterion_xor_lemma(std::string& detail) {
    Rng rng(20260809);
    int checked = 0;
    for (int trial = 0; trial < 500; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 6);
        Circuit x = random_circuit(rng, n, 7, 2);
        Circuit y = random_circuit(rng, n, 7, 2);
        PairStats base = stats(x, y);
        CircuitPair ab = xor_pair(x, y);
        PairStats out = stats(ab.a, ab.b);
        // SD squares on every pair
        if (out.sd != base.sd * base.sd) {
            detail = "SD squaring failed at trial " + std::to_string(trial);
            return false;
        }
        // the mutual-disjointness directions follow the exact product laws
        if (out.dxy != (base.dxy * base.dxy + base.dyx * base.dyx) / 2 ||
            out.dyx != base.dxy * base.dyx) {
            detail = "directional law failed at trial " + std::to_string(trial);
            return false;
        }

        // squaring of the mutual value on direction-symmetric pairs, the
        // domain the polarization machinery produces via symmetrization
        PromisePair sym = iid_to_mut_iid(x, y);
        PairStats sb = stats(sym.x, sym.y);
        if (sb.dxy != sb.dyx) {
            detail = "symmetrization failed at trial " + std::to_string(trial);
            return false;
        }
        CircuitPair sab = xor_pair(sym.x, sym.y);
        PairStats so = stats(sab.a, sab.b);
        if (so.sd != sb.sd * sb.sd || so.mut() != sb.mut() * sb.mut()) {
            detail = "symmetric-pair squaring failed at trial " + std::to_string(trial);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " pairs, all equalities exact";
    return checked >= 500;
}

// --- criterion 2: tensor upper bound --------------------------------------

bool criterion_tensor_bound(std::string& detail) {
    Rng rng(2);
    int checked = 0, strictly_tighter = 0;
    for (int trial = 0; trial < 500; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 4);
        Circuit x = random_circuit(rng, n, 6, 2);
        Circuit y = random_circuit(rng, n, 6, 2);
        Circuit z = random_circuit(rng, n, 6, 2);
        Circuit t = random_circuit(rng, n, 6, 2);
        Rational d1 = statistical_difference(enumerate_dist(x), enumerate_dist(y));
        Rational d2 = statistical_difference(enumerate_dist(z), enumerate_dist(t));
        Rational lhs =
            statistical_difference(enumerate_dist(tensor(x, z)), enumerate_dist(tensor(y, t)));
        Rational new_bound = 1 - (1 - d1) * (1 - d2);
        if (lhs > new_bound) {
            detail = "bound violated at trial " + std::to_string(trial);
            return false;
        }
        Rational additive = d1 + d2;
        Rational old_bound = additive > 1 ? Rational(1) : additive;
        if (new_bound < old_bound) ++strictly_tighter;
        ++checked;
    }
    detail = std::to_string(checked) + " quadruples, bound exact, " +
             std::to_string(strictly_tighter) + " strictly tighter than the additive bound";
    return checked >= 500 && strictly_tighter >= 1;
}

// --- criterion 3: direct product for disjointness -------------------------

bool criterion_direct_product(std::string& detail) {
    Rng rng(3);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 6);
        Circuit x = random_circuit(rng, n, 7, 2);
        Circuit y = random_circuit(rng, n, 7, 2);
        PairStats base = stats(x, y);
        for (uint32_t k = 1; k <= 3; ++k) {
            PairStats pk = stats(tensor_power(x, k), tensor_power(y, k));
            Rational keep = 1;
            for (uint32_t i = 0; i < k; ++i) keep *= 1 - base.dxy;
            if (pk.dxy != 1 - keep) {
                detail = "direct product failed at trial " + std::to_string(trial) +
                         ", k = " + std::to_string(k);
                return false;
            }
        }
        ++checked;
    }
    detail = std::to_string(checked) + " pairs, k in {1,2,3}, equalities exact";
    return checked >= 200;
}

// --- criterion 4: fixed point and recentring residuals ---------------------

bool criterion_fixed_point(std::string& detail) {
    const double phi = polarization_fixed_point();
    if (std::abs(round_map(phi) - phi) > 1e-12) {
        detail = "round map does not fix phi";
        return false;
    }
    int settings = 0;
    double worst = 0;
    for (int i = 1; i <= 10; ++i) {
        for (auto [a, b] : {std::pair{Rational(i, 40), Rational(i + 8, 40)},
                            std::pair{Rational(20 + i, 40), Rational(28 + i, 40)}}) {
            U0Solution sol = solve_u0(a, b);
            worst = std::max(worst, sol.residual);
            if (sol.residual > std::pow(2.0, -30)) {
                detail = "residual too large at a=" + to_string(a) + " b=" + to_string(b);
                return false;
            }
            ++settings;
        }
    }
    detail = std::to_string(settings) + " settings, worst residual " + std::to_string(worst);
    return settings >= 20;
}

// --- criterion 5: polarization end to end ----------------------------------

// 2-input witnesses keep the first T round constructible inside the budget;
// regimes are certified by exact enumeration before the pipeline runs.
std::vector<std::pair<Circuit, Circuit>> certified_small_pairs(Rng& rng, bool want_yes,
                                                               int count) {
    std::vector<std::pair<Circuit, Circuit>> out;
    while (static_cast<int>(out.size()) < count) {
        Circuit x = random_circuit(rng, 2, 6, 2);
        Circuit y = random_circuit(rng, 2, 6, 2);
        PairStats st = stats(x, y);
        if (want_yes && st.sd <= Rational(1, 4)) out.push_back({x, y});
        if (!want_yes && st.mut() >= Rational(1, 2)) out.push_back({x, y});
    }
    return out;
}

bool criterion_polarization(std::string& detail) {
    Rng rng(5);
    PolarizeOptions opts;
    opts.k = 4;
    opts.coin_bits = 3;
    opts.budget = 24;

    const Rational a(1, 4), b(1, 2);
    const Rational yes_target(1, 16), no_target(15, 16);
    int measured_stages = 0;

    auto run_side = [&](bool yes_side, std::string& why) {
        auto pairs = certified_small_pairs(rng, yes_side, 50);
        for (size_t i = 0; i < pairs.size(); ++i) {
            PolarizationResult res = polarize_mut_iid(pairs[i].first, pairs[i].second, a, b, opts);
            // every adjacent measured stage obeys the round-map recurrence
            // exactly (no tolerance)
            for (size_t s = 1; s < res.stages.size(); ++s) {
                if (!res.stages[s].measured || !res.stages[s - 1].measured) continue;
                const auto& prev = *res.stages[s - 1].measured;
                const auto& cur = *res.stages[s].measured;
                if (cur.sd > round_map(prev.sd) || cur.mut() < round_map(prev.mut())) {
                    why = "recurrence violated on instance " + std::to_string(i);
                    return false;
                }
                ++measured_stages;
            }
            if (res.constructed_rounds < 1) {
                why = "no T round constructed within the budget on instance " + std::to_string(i);
                return false;
            }
            if (yes_side && res.final_sd_upper > yes_target) {
                why = "Yes instance " + std::to_string(i) + " missed the gap";
                return false;
            }
            if (!yes_side && res.final_mut_lower < no_target) {
                why = "No instance " + std::to_string(i) + " missed the gap";
                return false;
            }
        }
        return true;
    };

    std::string why;
    if (!run_side(true, why) || !run_side(false, why)) {
        detail = why;
        return false;
    }
    detail = "50 instances per regime reach (1/16, 15/16); " +
             std::to_string(measured_stages) + " measured stage transitions respect the "
             "recurrence exactly";
    return true;
}

// --- criterion 6: entropy-to-intersection separation -----------------------

bool criterion_ea_bar(std::string& detail) {
    Rng rng(6);
    Rational max_yes(0), min_no(1);
    int yes_count = 0, no_count = 0;

    // Yes side: H(X) <= t - 1 at desk parameters s <= 2, m <= 3
    for (int i = 0; i < 8; ++i) {
        Circuit p2 = generate_ea_instance(rng, EaKind::Point, 2, 2, 0).x;
        Circuit p3 = generate_ea_instance(rng, EaKind::Point, 3, 2, 0).x;
        Circuit u1 = generate_ea_instance(rng, EaKind::UniformRange, 3, 2, 1).x;
        for (auto& [c, t, s] : std::vector<std::tuple<Circuit, uint32_t, uint32_t>>{
                 {p2, 1, 1}, {p2, 1, 2}, {p3, 1, 1}, {p3, 2, 1}, {u1, 2, 1}}) {
            if (yes_count >= 25) break;
            EaBarResult r = ea_bar_to_iid(c, t, s, 1, 24);
            if (r.pair.regime != Regime::Yes) continue;
            PairStats st = stats(r.pair.x, r.pair.y, 24);
            max_yes = std::max(max_yes, st.sd);
            ++yes_count;
        }
    }
    // No side: H(X) >= t + 1
    for (int i = 0; i < 8; ++i) {
        Circuit f2 = generate_ea_instance(rng, EaKind::UniformRange, 2, 2, 2).x;
        Circuit f3 = generate_ea_instance(rng, EaKind::UniformRange, 3, 3, 3).x;
        for (auto& [c, t, s] : std::vector<std::tuple<Circuit, uint32_t, uint32_t>>{
                 {f2, 1, 1}, {f2, 1, 2}, {f3, 1, 1}, {f3, 2, 1}}) {
            if (no_count >= 25) break;
            EaBarResult r = ea_bar_to_iid(c, t, s, 1, 24);
            if (r.pair.regime != Regime::No) continue;
            PairStats st = stats(r.pair.x, r.pair.y, 24);
            min_no = std::min(min_no, st.dxy);
            ++no_count;
        }
    }

    detail = std::to_string(yes_count) + " Yes instances (max SD " +
             std::to_string(to_double(max_yes)) + "), " + std::to_string(no_count) +
             " No instances (min Disj " + std::to_string(to_double(min_no)) + ")";
    if (yes_count < 20 || no_count < 20) return false;
    return max_yes + Rational(1, 5) <= min_no;
}

// --- criterion 7: protocol identities --------------------------------------

bool criterion_protocol_identities(std::string& detail) {
    Rng rng(7);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 3);
        Circuit x = random_circuit(rng, n, 6, 2);
        Circuit y = random_circuit(rng, n, 6, 2);
        ProtocolSpec spec = build_iid_protocol(x, y);
        ProtocolReport rep = measure(spec);
        ExactDist dx = enumerate_dist(x), dy = enumerate_dist(y);
        Rational dj = disjointness(dx, dy);
        Rational sd = statistical_difference(dx, dy);
        if (rep.soundness != 1 - dj) {
            detail = "soundness identity failed at trial " + std::to_string(trial);
            return false;
        }
        if (rep.completeness != 1 - dj) {
            detail = "completeness identity failed at trial " + std::to_string(trial);
            return false;
        }
        if (rep.deviation > sd + rep.abort_mass) {
            detail = "zero-knowledge bound failed at trial " + std::to_string(trial);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " instances, identities exact";
    return checked >= 100;
}

// --- criterion 8: disjointness vs SD for probabilistic circuits ------------

ProbabilisticCircuit noisy_circuit(Rng& rng, uint32_t n, uint32_t bad, uint64_t mask) {
    Circuit g = random_circuit(rng, n, 6, 2);
    Circuit c;
    c.n_inputs = n + 3;
    auto out = embed(c, g, input_range(0, n));
    WireRef corrupt = less_than_const(c, input_range(n, 3), bad);
    for (size_t i = 0; i < out.size(); ++i) {
        if ((mask >> i) & 1u)
            c.outputs.push_back(add_gate(c, GateOp::Xor, out[i], corrupt));
        else
            c.outputs.push_back(out[i]);
    }
    return ProbabilisticCircuit{c, n};
}

bool criterion_sd_to_disj(std::string& detail) {
    Rng rng(8);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
        uint32_t n = 1 + static_cast<uint32_t>(rng() % 4);
        uint32_t bad = static_cast<uint32_t>(rng() % 3); // eps in {0, 1/8, 1/4}
        ProbabilisticCircuit x = noisy_circuit(rng, n, bad, 1 + (rng() % 3));
        ProbabilisticCircuit y = noisy_circuit(rng, n, bad, 1 + (rng() % 3));
        Rational eps = std::max(epsilon_of(x), epsilon_of(y));
        Rational sd = statistical_difference(prob_output_dist(x), prob_output_dist(y));
        if (disjointness_prob(x, y) > sd + 2 * eps) {
            detail = "inequality violated at trial " + std::to_string(trial);
            return false;
        }
        ++checked;
    }
    detail = std::to_string(checked) + " probabilistic pairs, inequality exact";
    return checked >= 200;
}

// --- criterion 9: protocol-to-IID compiler on the IID protocol -------------

bool criterion_protocol_to_iid(std::string& detail) {
    Rng rng(9);
    int yes_ok = 0, no_ok = 0;
    for (int i = 0; i < 20; ++i) {
        GeneratedPair yes = generate_yes_iid(rng, 2, 2, Rational(1, 8));
        ProtocolSpec spec = build_iid_protocol(yes.pair.x, yes.pair.y);
        ProtocolReport rep = measure(spec);
        ProtocolToIidResult r = protocol_to_iid(spec, 3, spec.simulator.n_inputs);
        ExactDist d0 = prob_output_dist(r.d0), d1 = prob_output_dist(r.d1);
        Rational bottom = 0;
        for (const auto& [v, cnt] : d1.num)
            if ((v >> spec.help_bits) & 1u) bottom += Rational(cnt, d1.den);
        Rational sd = statistical_difference(d0, d1);
        if (sd <= Rational(1, 4) && sd <= rep.deviation + bottom) ++yes_ok;
    }
    for (int i = 0; i < 20; ++i) {
        uint64_t dial = 12 + (rng() % 5); // px = py in [3/4, 1]
        GeneratedPair no = generate_no_iid(rng, 2, 3, Rational(dial, 16), Rational(dial, 16));
        ProtocolSpec spec = build_iid_protocol(no.pair.x, no.pair.y);
        ProtocolToIidResult r = protocol_to_iid(spec, 3, spec.simulator.n_inputs);
        if (disjointness_prob(r.d0, r.d1) >= Rational(3, 4)) ++no_ok;
    }
    detail = std::to_string(yes_ok) + "/20 Yes within the closeness guarantee, " +
             std::to_string(no_ok) + "/20 No with disjointness >= 3/4";
    return yes_ok == 20 && no_ok == 20;
}

// --- criterion 10: quantum facts and the hashing trend ----------------------

Rational lhl_family_sd(uint32_t density_num) {
    // source: uniform over the first density_num of 16 domain points,
    // hashed 4 -> 2; SD(Z, I) = E_h[ SD(h(source), uniform) ]
    const uint32_t in = 4, out = 2;
    const uint32_t diag_bits = in + out - 1;
    Rational total(0);
    uint64_t family = uint64_t(1) << (diag_bits + out);
    for (uint64_t desc = 0; desc < family; ++desc) {
        AffineHash h = AffineHash::from_description(in, out, desc);
        uint64_t counts[4] = {0, 0, 0, 0};
        for (uint64_t x = 0; x < density_num; ++x) ++counts[h.eval(x)];
        Rational cond(0);
        for (int w = 0; w < 4; ++w) {
            Rational diff = Rational(counts[w], density_num) - Rational(1, 4);
            cond += diff < 0 ? -diff : diff;
        }
        total += cond / 2;
    }
    return total / Rational(family);
}

bool criterion_quantum(std::string& detail) {
    std::mt19937_64 rng(10);
    uint64_t states = 0;
    for (int n = 1; n <= 4; ++n) {
        const int trials = n == 4 ? 400 : 800;
        for (int i = 0; i < trials; ++i) {
            DensityMatrix st;
            switch (i % 4) {
                case 0: st = random_mixed_state(n, rng); break;
                case 1: st = random_pure_state(n, rng); break;
                case 2: st = depolarized_pure(n, double(rng() % 1001) / 1000.0); break;
                default: st = random_rank_deficient(n, 1 + int(rng() % (1 << n)), rng);
            }
            if (!fact_check_entropy_bounds(st).lower_ok) {
                detail = "counterexample found at n = " + std::to_string(n);
                return false;
            }
            ++states;
        }
        // parametric sweeps
        for (int p = 0; p <= 100; ++p) {
            if (!fact_check_entropy_bounds(depolarized_pure(n, p / 100.0)).lower_ok) {
                detail = "depolarized counterexample at n = " + std::to_string(n);
                return false;
            }
            ++states;
        }
        // exact tightness at the pure-state boundary
        EntropyBoundsReport pure = fact_check_entropy_bounds(random_pure_state(n, rng));
        if (std::abs(pure.entropy) > 1e-9 || std::abs(pure.upper_bound) > 1e-9) {
            detail = "pure-state boundary not tight at n = " + std::to_string(n);
            return false;
        }
        ++states;
    }
    while (states < 10000) {
        int n = 1 + int(rng() % 4);
        if (!fact_check_entropy_bounds(random_mixed_state(n, rng)).lower_ok) {
            detail = "counterexample in the extra random batch";
            return false;
        }
        ++states;
    }

    Rational sd_half = lhl_family_sd(8);
    Rational sd_three_quarters = lhl_family_sd(12);
    Rational sd_full = lhl_family_sd(16);
    if (!(sd_half >= sd_three_quarters && sd_three_quarters >= sd_full &&
          sd_half > sd_full)) {
        detail = "hashing trend not monotone";
        return false;
    }
    detail = std::to_string(states) + " states, zero counterexamples; hash SD trend " +
             std::to_string(to_double(sd_half)) + " >= " +
             std::to_string(to_double(sd_three_quarters)) + " >= " +
             std::to_string(to_double(sd_full));
    return true;
}

struct Criterion {
    int id;
    const char* name;
    std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "XOR lemma exactness", criterion_xor_lemma},
        {2, "tensor SD upper bound", criterion_tensor_bound},
        {3, "disjointness direct product", criterion_direct_product},
        {4, "fixed point and recentring residuals", criterion_fixed_point},
        {5, "polarization end to end", criterion_polarization},
        {6, "entropy-threshold separation", criterion_ea_bar},
        {7, "protocol identities", criterion_protocol_identities},
        {8, "probabilistic disjointness vs SD", criterion_sd_to_disj},
        {9, "protocol-to-IID compiler", criterion_protocol_to_iid},
        {10, "quantum entropy facts and hashing trend", criterion_quantum},
    };

    int only = argc > 1 ? std::atoi(argv[1]) : 0;
    bool all_ok = true;
    for (auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::printf("%s criterion %2d (%s): %s\n", ok ? "PASS" : "FAIL", c.id, c.name,
                    detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
