#pragma once

#include "zkdesk/reduce.hpp"

#include <json.hpp>

#include <random>

namespace zkdesk {

/// All generators run on std::mt19937_64 seeded directly with the 64-bit
/// seed, so (kind, params, seed) reproduces an instance bit-exactly.
using Rng = std::mt19937_64;

/// Random circuit over the full gate set with the given shape.
Circuit random_circuit(Rng& rng, uint32_t n_inputs, uint32_t n_gates, uint32_t width);

struct GeneratedPair {
    PromisePair pair;
    nlohmann::ordered_json certificate;
};

/// Yes instance: both circuits share a common body and deviate only on
/// selector slices of dyadic mass px, py, so SD <= px + py <= target. The
/// certificate records the enumerated SD.
GeneratedPair generate_yes_iid(Rng& rng, uint32_t body_bits, uint32_t width,
                               const Rational& target_sd, uint32_t budget = budget_bits());

/// No instance with exact directional disjointness: each side routes mass
/// px (resp. py) to its own reserved value block, disjoint from everything
/// else, giving Disj(X,Y) = px and Disj(Y,X) = py exactly. mut-Disj is
/// certified by enumeration.
GeneratedPair generate_no_iid(Rng& rng, uint32_t body_bits, uint32_t width, const Rational& px,
                              const Rational& py, uint32_t budget = budget_bits());

enum class EaKind : uint8_t { Point, UniformRange, Mixed };

struct GeneratedEa {
    Circuit x;
    double entropy = 0;
    nlohmann::ordered_json certificate;
};

/// Entropy-controlled instances for the entropy-approximation problems:
/// Point has H = 0, UniformRange has H = j for a chosen j (uniform over 2^j
/// values behind an input-mixing bijection), Mixed draws a random circuit
/// and certifies whatever entropy it has.
GeneratedEa generate_ea_instance(Rng& rng, EaKind kind, uint32_t m_inputs, uint32_t width,
                                 uint32_t j, uint32_t budget = budget_bits());

} // namespace zkdesk
