#pragma once

#include "zkdesk/dist.hpp"

#include <map>
#include <optional>

namespace zkdesk {

/// A circuit whose inputs split into argument bits x (the low-indexed
/// arg_bits inputs) and coin bits (the rest). The circuit is
/// epsilon-probabilistic when every argument has a unique output attained
/// with coin-probability at least 1 - epsilon; that output is the
/// argument's natural image.
struct ProbabilisticCircuit {
    Circuit base;
    uint32_t arg_bits = 0;

    uint32_t coin_bits() const { return base.n_inputs - arg_bits; }
};

struct ProbAnalysis {
    Rational epsilon;                    // smallest valid epsilon
    std::map<uint64_t, uint64_t> natural; // argument -> natural image
    std::set<uint64_t> natural_image() const;
};

/// Computes the natural image map and the exact epsilon. Throws
/// PreconditionError (with the offending argument) when some argument has
/// no output of coin-probability > 1/2, i.e. the natural image is
/// ill-defined.
ProbAnalysis analyze_probabilistic(const ProbabilisticCircuit& p, uint32_t budget = budget_bits());

Rational epsilon_of(const ProbabilisticCircuit& p, uint32_t budget = budget_bits());
uint64_t natural_image(const ProbabilisticCircuit& p, uint64_t arg, uint32_t budget = budget_bits());

/// Full output distribution with arguments and coins both uniform.
ExactDist prob_output_dist(const ProbabilisticCircuit& p, uint32_t budget = budget_bits());

/// (1/2^n_x) sum_r max_y Pr[Y(y) = X(r)], the collision probability against
/// the best argument of Y, probabilities over both circuits' coins. On
/// deterministic circuits this equals 1 - Disj(X,Y).
Rational hit_probability(const ProbabilisticCircuit& x, const ProbabilisticCircuit& y,
                         uint32_t budget = budget_bits());

/// Natural-image disjointness: fraction of X's argument space whose natural
/// image lies outside the natural image set of Y. Coincides with
/// disjointness() on deterministic circuits.
Rational disjointness_prob(const ProbabilisticCircuit& x, const ProbabilisticCircuit& y,
                           uint32_t budget = budget_bits());

/// Treats a plain circuit as fully deterministic (all inputs are arguments).
ProbabilisticCircuit as_deterministic(const Circuit& c);

} // namespace zkdesk
