#pragma once

#include "zkdesk/circuit.hpp"
#include "zkdesk/rational.hpp"

#include <string>

namespace zkdesk {

/// Result of a pair-valued operator, with a provenance note recording the
/// operator and its parameters.
struct CircuitPair {
    Circuit a;
    Circuit b;
    std::string provenance;
};

/// X (x) Y: independent input blocks, concatenated outputs.
Circuit tensor(const Circuit& x, const Circuit& y);

/// X (x) ... (x) X, k independent copies. Requires k >= 1.
Circuit tensor_power(const Circuit& x, uint32_t k);

/// Two-pair selector construction: one selector bit b, one sample from each
/// pair, A takes both samples at position b, B takes positions b and not-b.
///   A: b=0 -> X0 (x) X1,  b=1 -> Y0 (x) Y1
///   B: b=0 -> X0 (x) Y1,  b=1 -> Y0 (x) X1
/// SD(A,B) = SD(X0,Y0) * SD(X1,Y1) holds exactly. Requires the members of
/// each pair to share a width.
CircuitPair or_xor_pair(const Circuit& x0, const Circuit& y0, const Circuit& x1,
                        const Circuit& y1);

/// Pair XOR operator: the special case of the two-pair construction applied
/// to ((X0,X1),(X0,X1)); SD and both disjointness directions square.
CircuitPair xor_pair(const Circuit& x0, const Circuit& x1);

/// One polarization round: (U,V) = xor_pair(X,Y) and the result is
/// (U (x) U, V (x) V), driving the pair's statistics through
/// f(x) = 1 - (1 - x^2)^2.
CircuitPair t_operator(const Circuit& x, const Circuit& y);

enum class MixTag : uint8_t { Gamma, GammaPrime };

/// u*X + (1-u)*point(tag). The output is widened by two tag bits
/// ("00" real, "10" Gamma, "11" GammaPrime) so the symbol values lie outside
/// any real image structurally. u must be s/2^coin_bits; the selector coins
/// are the lowest-index fresh inputs.
Circuit gamma_mixture(const Circuit& x, const Rational& u, uint32_t coin_bits, MixTag tag);

/// X (x) uniform on extra_bits fresh bits.
Circuit append_uniform(const Circuit& x, uint32_t extra_bits);

} // namespace zkdesk
