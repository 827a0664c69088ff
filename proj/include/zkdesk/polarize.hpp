#pragma once

#include "zkdesk/dist.hpp"
#include "zkdesk/ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zkdesk {

/// Fixed point of the polarization round map f(x) = 1 - (1 - x^2)^2,
/// the golden-ratio conjugate (sqrt(5) - 1) / 2.
double polarization_fixed_point();

/// f and g of the recentring step, as functions of the mixture weight u and
/// a statistic value d:
///   f(u,d) = u^2 d + 2u(1-u)            (same-tag pairs)
///   g(u,d) = u^2 d + 2u(1-u) + (1-u)^2  (cross-tag pairs)
double recentring_f(double u, double d);
double recentring_g(double u, double d);

/// The round map f(x) = 1 - (1 - x^2)^2 on exact rationals.
Rational round_map(const Rational& x);
double round_map(double x);

/// Dyadic bracket (lo, hi) with lo < (sqrt(5)-1)/2 < hi and hi - lo <= 2^-bits.
std::pair<Rational, Rational> fixed_point_bracket(uint32_t bits = 160);

enum class TagChoice : uint8_t { Same, Cross };

struct U0Solution {
    Rational u0;     // dyadic root of f(u0,delta)=phi (same) or g(u0,delta)=phi (cross)
    TagChoice tag;
    double residual; // |f_or_g(u0, delta) - phi| after snapping
};

/// Solves the recentring equation for delta = (a+b)/2: same-tag via f when
/// delta > phi, cross-tag via g when delta < phi, u0 = 1 at the fixed point.
/// The root is located to 2^-precision_bits and snapped to a dyadic with
/// that many bits.
U0Solution solve_u0(const Rational& a, const Rational& b, uint32_t precision_bits = 40);

struct PolarizeOptions {
    uint32_t k = 4;                  // target gap (2^-k, 1 - 2^-k)
    uint32_t coin_bits = 3;          // resolution of the built mixture weight
    uint32_t budget = budget_bits(); // max input bits for constructed circuits
    uint32_t max_rounds = 64;
};

/// Exact statistics of one constructed stage of the pipeline.
struct StageStats {
    Rational sd;
    Rational disj_xy;
    Rational disj_yx;
    Rational mut() const { return std::min(disj_xy, disj_yx); }
};

struct PolarizeStage {
    std::string name;     // "mixture", "t1", "t2", ...
    uint32_t n_inputs = 0;
    bool constructed = false;
    std::optional<StageStats> measured; // present when constructed
    // promise-level certified bounds (from the constants a, b)
    Rational plan_yes_ub;
    Rational plan_no_lb;
    // instance-level certified values, seeded from the last measurement:
    // an exact upper bound on this stage's SD and exact lower bound on its
    // mutual disjointness
    std::optional<Rational> path_sd_ub;
    std::optional<Rational> path_mut_lb;
};

struct PolarizationPlan {
    Rational a, b;
    Rational u0;         // root reported by solve_u0
    TagChoice tag;
    Rational weight;     // effective mixture weight applied by the pipeline
    uint32_t coin_bits = 0;
    uint32_t t_rounds = 0; // planned T rounds to reach the gap
    uint32_t final_gap_k = 0;
    uint32_t budget = 0;
};

struct PolarizationResult {
    Circuit x_out; // last constructed pair
    Circuit y_out;
    PolarizationPlan plan;
    std::vector<PolarizeStage> stages;
    uint32_t constructed_rounds = 0;      // T rounds that fit the budget
    bool construction_reached_target = false;
    // certified end-of-plan values for this instance (exact arithmetic with
    // outward dyadic rounding, so both remain valid bounds)
    Rational final_sd_upper;
    Rational final_mut_lower;
};

/// The mut-IID polarization pipeline: recentre both distributions at the
/// fixed point with a gamma mixture, then iterate the T operator. Circuits
/// are constructed and measured while they fit the budget; past that the
/// pipeline continues on the exact stage laws (SD squares under the pair
/// XOR, disjointness follows the direct-product law per direction), so the
/// reported final bounds stay certified.
PolarizationResult polarize_mut_iid(const Circuit& x, const Circuit& y, const Rational& a,
                                    const Rational& b, const PolarizeOptions& opts = {});

} // namespace zkdesk
