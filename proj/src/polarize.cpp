#include "zkdesk/polarize.hpp"

#include <cmath>

namespace zkdesk {

double polarization_fixed_point() {
    return (std::sqrt(5.0) - 1.0) / 2.0;
}

double recentring_f(double u, double d) {
    return u * u * d + 2.0 * u * (1.0 - u);
}

double recentring_g(double u, double d) {
    return u * u * d + 2.0 * u * (1.0 - u) + (1.0 - u) * (1.0 - u);
}

Rational round_map(const Rational& x) {
    Rational one_minus = 1 - x * x;
    return 1 - one_minus * one_minus;
}

double round_map(double x) {
    double one_minus = 1.0 - x * x;
    return 1.0 - one_minus * one_minus;
}

std::pair<Rational, Rational> fixed_point_bracket(uint32_t bits) {
    // phi = (sqrt(5) - 1) / 2: isqrt(5 * 4^(bits+1)) gives floor(sqrt(5) * 2^(bits+1))
    BigInt scaled = BigInt(5) << (2 * (bits + 1));
    BigInt root = boost::multiprecision::sqrt(scaled); // floor
    BigInt den = BigInt(1) << (bits + 1);
    Rational lo = Rational(root - den, den) / 2;
    Rational hi = Rational(root + 1 - den, den) / 2;
    return {lo, hi};
}

namespace {

// Outward dyadic rounding keeps analytic continuation bounds valid while
// stopping the exact representations from growing without bound.
constexpr uint32_t kTrackBits = 192;

Rational round_up_dyadic(const Rational& r, uint32_t bits) {
    BigInt scale = BigInt(1) << bits;
    BigInt num = boost::multiprecision::numerator(r) * scale;
    BigInt den = boost::multiprecision::denominator(r);
    BigInt q = num / den;
    if (q * den != num) ++q; // ceil for nonnegative values
    return Rational(q, scale);
}

Rational round_down_dyadic(const Rational& r, uint32_t bits) {
    BigInt scale = BigInt(1) << bits;
    BigInt num = boost::multiprecision::numerator(r) * scale;
    BigInt den = boost::multiprecision::denominator(r);
    return Rational(num / den, scale); // floor for nonnegative values
}

double eval_recentring(TagChoice tag, double u, double d) {
    return tag == TagChoice::Same ? recentring_f(u, d) : recentring_g(u, d);
}

// Exact mixture laws of the built gamma-mixture pair, as a function of the
// applied weight w:
//   same tag : SD' = w*SD,             Disj' = w*Disj (each direction)
//   cross tag: SD' = w*SD + (1-w),     Disj' = w*Disj + (1-w)
Rational mixture_law(TagChoice tag, const Rational& w, const Rational& d) {
    if (tag == TagChoice::Same) return w * d;
    return w * d + (1 - w);
}

// One analytic T round on the exact per-direction disjointness pair.
// (U,V) = xor_pair: Disj(U,V) = (d1^2 + d2^2)/2 and Disj(V,U) = d1*d2;
// tensor-squaring maps each direction e to 1 - (1-e)^2. Both laws are
// unconditional equalities, so with downward rounding the pair stays an
// exact-or-lower bound componentwise.
std::pair<Rational, Rational> t_round_dirs(const Rational& d1, const Rational& d2) {
    Rational u = (d1 * d1 + d2 * d2) / 2;
    Rational v = d1 * d2;
    // explicit return type: the expression must materialize before `rest`
    // goes out of scope
    auto square_amplify = [](const Rational& e) -> Rational {
        Rational rest = 1 - e;
        return 1 - rest * rest;
    };
    return {round_down_dyadic(square_amplify(u), kTrackBits),
            round_down_dyadic(square_amplify(v), kTrackBits)};
}

} // namespace

U0Solution solve_u0(const Rational& a, const Rational& b, uint32_t precision_bits) {
    if (!(b > a)) throw PreconditionError("requires b > a");
    if (a < 0 || b > 1) throw PreconditionError("promise constants must lie in [0,1]");
    const double delta = to_double(Rational(a + b) / 2);
    const double phi = polarization_fixed_point();

    U0Solution sol;
    auto [phi_lo, phi_hi] = fixed_point_bracket(120);
    Rational delta_exact = Rational(a + b) / 2;
    if (delta_exact > phi_lo && delta_exact < phi_hi) {
        // numerically at the fixed point: identity step
        sol.u0 = Rational(1);
        sol.tag = TagChoice::Same;
        sol.residual = std::abs(recentring_f(1.0, delta) - phi);
        return sol;
    }

    double lo = 0.0, hi = 1.0;
    if (delta_exact >= phi_hi) {
        sol.tag = TagChoice::Same;
        // f(., delta) increases up to u = 1/(2-delta) and f at that vertex
        // exceeds phi, so the root lies left of the vertex
        hi = 1.0 / (2.0 - delta);
        if (hi > 1.0) hi = 1.0;
    } else {
        sol.tag = TagChoice::Cross;
        // g(., delta) decreases from 1 to delta
    }
    const bool increasing = sol.tag == TagChoice::Same;
    for (uint32_t it = 0; it < precision_bits + 8; ++it) {
        double mid = 0.5 * (lo + hi);
        double val = eval_recentring(sol.tag, mid, delta);
        if ((val < phi) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    const double root = 0.5 * (lo + hi);
    BigInt scale = BigInt(1) << precision_bits;
    BigInt snapped(static_cast<long long>(std::llround(root * std::pow(2.0, precision_bits))));
    sol.u0 = Rational(snapped, scale);
    sol.residual = std::abs(eval_recentring(sol.tag, to_double(sol.u0), delta) - phi);
    return sol;
}

PolarizationResult polarize_mut_iid(const Circuit& x, const Circuit& y, const Rational& a,
                                    const Rational& b, const PolarizeOptions& opts) {
    if (!(b > a)) throw PreconditionError("requires b > a");
    if (!(a > 0) || !(b < 1))
        throw PreconditionError("promise constants must satisfy 0 < a < b < 1");
    if (x.width() != y.width()) throw PreconditionError("width mismatch");

    const Rational delta = Rational(a + b) / 2;
    auto [phi_lo, phi_hi] = fixed_point_bracket(160);
    U0Solution sol = solve_u0(a, b);

    // Effective mixture weight: the exact law of the built pair must land the
    // promise interval astride the fixed point. Cross-tag recentring follows
    // the g equation with weight u0^2 (two composed mixtures); the same-tag f
    // equation does not describe the built mixture, whose exact law is linear
    // in the weight, so the weight is solved from that law directly.
    Rational weight;
    if (delta > phi_lo && delta < phi_hi) {
        weight = 1;
    } else if (sol.tag == TagChoice::Cross) {
        weight = snap_to_dyadic(sol.u0 * sol.u0, opts.coin_bits);
    } else {
        Rational phi_mid = (phi_lo + phi_hi) / 2;
        weight = snap_to_dyadic(phi_mid / delta, opts.coin_bits);
    }

    Rational yes0 = mixture_law(sol.tag, weight, a);
    Rational no0 = mixture_law(sol.tag, weight, b);
    const bool recentred = weight == 1 ? true : (yes0 <= phi_lo && no0 >= phi_hi);
    if (!recentred)
        throw PreconditionError("coin budget too coarse to recentre between the promise "
                                "constants; increase coin_bits");

    PolarizationResult res;
    res.plan.a = a;
    res.plan.b = b;
    res.plan.u0 = sol.u0;
    res.plan.tag = sol.tag;
    res.plan.weight = weight;
    res.plan.coin_bits = opts.coin_bits;
    res.plan.final_gap_k = opts.k;
    res.plan.budget = opts.budget;

    // Plan the round count from the promise-level recurrence.
    const Rational yes_target = Rational(1, BigInt(1) << opts.k);
    const Rational no_target = 1 - yes_target;
    std::vector<std::pair<Rational, Rational>> plan_bounds; // per stage, starting at mixture
    Rational py = yes0, pn = no0;
    plan_bounds.push_back({py, pn});
    uint32_t rounds = 0;
    while ((py > yes_target || pn < no_target) && rounds < opts.max_rounds) {
        py = round_up_dyadic(round_map(py), kTrackBits);
        pn = round_down_dyadic(round_map(pn), kTrackBits);
        plan_bounds.push_back({py, pn});
        ++rounds;
    }
    if (py > yes_target || pn < no_target)
        throw PreconditionError("round budget exhausted before reaching the target gap");
    res.plan.t_rounds = rounds;

    // Construct the mixture stage (required to fit the budget).
    const MixTag x_tag = MixTag::Gamma;
    const MixTag y_tag = sol.tag == TagChoice::Cross ? MixTag::GammaPrime : MixTag::Gamma;
    const uint32_t coin_bits = weight == 1 ? 0 : opts.coin_bits;
    Circuit cx = gamma_mixture(x, weight, coin_bits, x_tag);
    Circuit cy = gamma_mixture(y, weight, coin_bits, y_tag);
    if (std::max(cx.n_inputs, cy.n_inputs) > opts.budget)
        throw BudgetExceeded("mixture stage needs " +
                             std::to_string(std::max(cx.n_inputs, cy.n_inputs)) +
                             " input bits, budget is " + std::to_string(opts.budget));

    auto measure_pair = [&](const Circuit& a_c, const Circuit& b_c) {
        ExactDist da = enumerate_dist(a_c, opts.budget);
        ExactDist db = enumerate_dist(b_c, opts.budget);
        StageStats st;
        st.sd = statistical_difference(da, db);
        st.disj_xy = disjointness(da, db);
        st.disj_yx = disjointness(db, da);
        return st;
    };

    PolarizeStage mix_stage;
    mix_stage.name = "mixture";
    mix_stage.n_inputs = std::max(cx.n_inputs, cy.n_inputs);
    mix_stage.constructed = true;
    mix_stage.measured = measure_pair(cx, cy);
    mix_stage.plan_yes_ub = plan_bounds[0].first;
    mix_stage.plan_no_lb = plan_bounds[0].second;
    mix_stage.path_sd_ub = mix_stage.measured->sd;
    mix_stage.path_mut_lb = mix_stage.measured->mut();
    res.stages.push_back(mix_stage);

    // Iterate T: construct and measure while circuits fit, then continue on
    // the exact stage laws seeded from the last measurement.
    Rational path_sd = mix_stage.measured->sd;
    Rational path_d1 = mix_stage.measured->disj_xy;
    Rational path_d2 = mix_stage.measured->disj_yx;
    bool analytic = false;
    res.x_out = cx;
    res.y_out = cy;
    res.constructed_rounds = 0;

    for (uint32_t i = 1; i <= rounds; ++i) {
        PolarizeStage st;
        st.name = "t" + std::to_string(i);
        st.plan_yes_ub = plan_bounds[i].first;
        st.plan_no_lb = plan_bounds[i].second;

        const uint32_t next_inputs = 2 + 4 * std::max(res.x_out.n_inputs, res.y_out.n_inputs);
        if (!analytic && next_inputs <= opts.budget) {
            CircuitPair next = t_operator(res.x_out, res.y_out);
            st.n_inputs = next_inputs;
            st.constructed = true;
            st.measured = measure_pair(next.a, next.b);
            res.x_out = std::move(next.a);
            res.y_out = std::move(next.b);
            res.constructed_rounds = i;
            path_sd = st.measured->sd;
            path_d1 = st.measured->disj_xy;
            path_d2 = st.measured->disj_yx;
        } else {
            analytic = true;
            // SD squares under the pair XOR (exact) and tensoring can only
            // push it up to the product bound, so the round map is a valid
            // upper bound; the disjointness pair follows exact laws.
            path_sd = round_up_dyadic(round_map(path_sd), kTrackBits);
            if (path_sd > 1) path_sd = 1;
            auto [n1, n2] = t_round_dirs(path_d1, path_d2);
            path_d1 = n1;
            path_d2 = n2;
        }
        st.path_sd_ub = path_sd;
        st.path_mut_lb = std::min(path_d1, path_d2);
        res.stages.push_back(st);
    }

    res.construction_reached_target = res.constructed_rounds == rounds;
    res.final_sd_upper = path_sd;
    res.final_mut_lower = std::min(path_d1, path_d2);
    return res;
}

} // namespace zkdesk
