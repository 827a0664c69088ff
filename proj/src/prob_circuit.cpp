#include "zkdesk/prob_circuit.hpp"

#include <unordered_map>

namespace zkdesk {

namespace {

// Conditional output tally for one argument value: output -> coin count.
std::unordered_map<uint64_t, uint64_t> coin_tally(const ProbabilisticCircuit& p, uint64_t arg) {
    std::unordered_map<uint64_t, uint64_t> tally;
    const uint32_t nc = p.coin_bits();
    for (uint64_t coins = 0; coins < (uint64_t(1) << nc); ++coins) {
        const uint64_t in = arg | (coins << p.arg_bits);
        ++tally[p.base.evaluate_u64(in)];
    }
    return tally;
}

void check_budget(const ProbabilisticCircuit& p, uint32_t budget) {
    require_valid(p.base);
    if (p.arg_bits > p.base.n_inputs)
        throw PreconditionError("argument bits exceed circuit inputs");
    if (p.base.n_inputs > budget)
        throw BudgetExceeded("probabilistic analysis over " + std::to_string(p.base.n_inputs) +
                             " input bits exceeds budget " + std::to_string(budget));
}

} // namespace

ProbabilisticCircuit as_deterministic(const Circuit& c) {
    return ProbabilisticCircuit{c, c.n_inputs};
}

std::set<uint64_t> ProbAnalysis::natural_image() const {
    std::set<uint64_t> s;
    for (const auto& [arg, img] : natural) s.insert(img);
    return s;
}

ProbAnalysis analyze_probabilistic(const ProbabilisticCircuit& p, uint32_t budget) {
    check_budget(p, budget);
    const uint32_t nc = p.coin_bits();
    const BigInt coin_den = BigInt(1) << nc;
    ProbAnalysis out;
    out.epsilon = Rational(0);
    for (uint64_t arg = 0; arg < (uint64_t(1) << p.arg_bits); ++arg) {
        auto tally = coin_tally(p, arg);
        uint64_t best_out = 0, best_cnt = 0;
        for (const auto& [y, cnt] : tally) {
            if (cnt > best_cnt || (cnt == best_cnt && y < best_out)) {
                best_out = y;
                best_cnt = cnt;
            }
        }
        // natural image requires strict majority, else epsilon >= 1/2 and
        // uniqueness fails
        if (Rational(best_cnt, coin_den) <= Rational(1, 2))
            throw PreconditionError("natural image ill-defined for argument " +
                                    format_bits(arg, p.arg_bits));
        out.natural[arg] = best_out;
        Rational eps = Rational(BigInt((uint64_t(1) << nc) - best_cnt), coin_den);
        if (eps > out.epsilon) out.epsilon = eps;
    }
    return out;
}

Rational epsilon_of(const ProbabilisticCircuit& p, uint32_t budget) {
    return analyze_probabilistic(p, budget).epsilon;
}

uint64_t natural_image(const ProbabilisticCircuit& p, uint64_t arg, uint32_t budget) {
    check_budget(p, budget);
    auto tally = coin_tally(p, arg);
    uint64_t best_out = 0, best_cnt = 0;
    for (const auto& [y, cnt] : tally) {
        if (cnt > best_cnt || (cnt == best_cnt && y < best_out)) {
            best_out = y;
            best_cnt = cnt;
        }
    }
    if (Rational(best_cnt, BigInt(1) << p.coin_bits()) <= Rational(1, 2))
        throw PreconditionError("natural image ill-defined for argument " +
                                format_bits(arg, p.arg_bits));
    return best_out;
}

ExactDist prob_output_dist(const ProbabilisticCircuit& p, uint32_t budget) {
    check_budget(p, budget);
    return enumerate_dist(p.base, budget);
}

Rational hit_probability(const ProbabilisticCircuit& x, const ProbabilisticCircuit& y,
                         uint32_t budget) {
    check_budget(x, budget);
    check_budget(y, budget);
    if (x.base.width() != y.base.width()) throw PreconditionError("width mismatch");

    // Conditional distributions of Y per argument, reused across all r.
    const uint64_t y_args = uint64_t(1) << y.arg_bits;
    const BigInt y_coin_den = BigInt(1) << y.coin_bits();
    std::vector<std::unordered_map<uint64_t, uint64_t>> y_cond(y_args);
    for (uint64_t a = 0; a < y_args; ++a) y_cond[a] = coin_tally(y, a);

    const BigInt x_coin_den = BigInt(1) << x.coin_bits();
    Rational total(0);
    for (uint64_t r = 0; r < (uint64_t(1) << x.arg_bits); ++r) {
        auto x_cond = coin_tally(x, r);
        Rational best(0);
        for (uint64_t a = 0; a < y_args; ++a) {
            BigInt collisions = 0;
            for (const auto& [v, cx] : x_cond) {
                auto it = y_cond[a].find(v);
                if (it != y_cond[a].end()) collisions += BigInt(cx) * it->second;
            }
            Rational pr(collisions, x_coin_den * y_coin_den);
            if (pr > best) best = pr;
        }
        total += best;
    }
    return total / Rational(BigInt(1) << x.arg_bits);
}

Rational disjointness_prob(const ProbabilisticCircuit& x, const ProbabilisticCircuit& y,
                           uint32_t budget) {
    if (x.base.width() != y.base.width()) throw PreconditionError("width mismatch");
    ProbAnalysis ax = analyze_probabilistic(x, budget);
    ProbAnalysis ay = analyze_probabilistic(y, budget);
    if (ax.epsilon >= Rational(1, 2) || ay.epsilon >= Rational(1, 2))
        throw PreconditionError("not epsilon-probabilistic for any epsilon < 1/2");
    std::set<uint64_t> y_img = ay.natural_image();
    uint64_t outside = 0;
    for (const auto& [arg, img] : ax.natural)
        if (!y_img.count(img)) ++outside;
    return Rational(BigInt(outside), BigInt(1) << x.arg_bits);
}

} // namespace zkdesk
