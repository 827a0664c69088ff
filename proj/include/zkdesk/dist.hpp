#pragma once

#include "zkdesk/circuit.hpp"
#include "zkdesk/rational.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace zkdesk {

/// Exact distribution over width-bit strings. Masses share the common
/// denominator `den`, so mass(x) = num[x] / den and sum(num) == den.
/// Enumeration always yields den = 2^n; protocol view distributions may
/// carry non-dyadic denominators (uniform choice over preimage sets).
struct ExactDist {
    uint32_t width = 0;
    BigInt den = 1;
    std::map<uint64_t, BigInt> num; // support only: values are > 0

    Rational mass(uint64_t x) const;
    size_t support_size() const { return num.size(); }
    std::set<uint64_t> support() const;
    bool in_support(uint64_t x) const { return num.count(x) != 0; }

    /// Checks: width sane, all numerators positive, masses sum to den.
    void check_consistent() const;

    /// Rescales so both distributions share one denominator (helper for
    /// exact pairwise statistics).
    static void align(ExactDist& a, ExactDist& b);

    /// point mass at x
    static ExactDist point(uint32_t width, uint64_t x);
    /// uniform over all width-bit strings
    static ExactDist uniform(uint32_t width);
};

/// Exhaustively enumerates the distribution a circuit encodes.
/// Requires c valid, c.n_inputs <= budget and width <= 62.
ExactDist enumerate_dist(const Circuit& c, uint32_t budget = budget_bits());

/// SD(X,Y) = (1/2) sum |x_i - y_i|. Requires equal widths.
Rational statistical_difference(const ExactDist& x, const ExactDist& y);
/// 1 - SD
Rational statistical_closeness(const ExactDist& x, const ExactDist& y);

/// Mass of X lying outside the support of Y. For a circuit-derived X this
/// equals the fraction of X's input space whose image Y never attains.
Rational disjointness(const ExactDist& x, const ExactDist& y);
/// min(Disj(X,Y), Disj(Y,X))
Rational mutual_disjointness(const ExactDist& x, const ExactDist& y);

/// -sum p log2 p over the support, in bits.
double shannon_entropy(const ExactDist& x);

/// log2 |{r : c(r) = x}|; -infinity when the preimage is empty (never NaN).
double preimage_log_count(const Circuit& c, uint64_t x, uint32_t budget = budget_bits());

/// Total mass of x with |log2 mass(x) + H(X)| <= threshold.
Rational typicality_mass(const ExactDist& x, double threshold);

/// CSV export, one line per support element: bitstring,numerator,denominator_power
/// Requires a dyadic denominator. Bitstrings print output bit 0 first.
std::string dist_to_csv(const ExactDist& x);

std::string format_bits(uint64_t x, uint32_t width);

} // namespace zkdesk
