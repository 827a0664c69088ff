#pragma once

#include "zkdesk/circuit.hpp"

#include <cstdint>
#include <vector>

namespace zkdesk {

/// GF(2) affine map h(x) = Tx ^ c with T a Toeplitz matrix. The family over
/// uniform (diag, offset) is 2-universal, and the Toeplitz structure keeps
/// the description to (in + out - 1) + out bits, which is what makes hashed
/// constructions enumerable at desk scale.
struct AffineHash {
    uint32_t in_bits = 0;
    uint32_t out_bits = 0;
    uint64_t diag = 0;   // in + out - 1 bits; row j reads window out-1-j ...
    uint64_t offset = 0; // out bits

    uint32_t desc_bits() const { return in_bits + out_bits - 1 + out_bits; }
    uint64_t row_mask(uint32_t j) const;
    uint64_t eval(uint64_t x) const;

    /// Packs as [diag][offset], low bits first.
    uint64_t describe() const;
    static AffineHash from_description(uint32_t in_bits, uint32_t out_bits, uint64_t desc);
    static uint64_t family_size_log2(uint32_t in_bits, uint32_t out_bits) {
        return in_bits + 2u * out_bits - 1u;
    }
};

/// Composes X with a fixed hash: output is h(X(r)).
/// Requires h.in_bits == x.width().
Circuit hash_apply(const AffineHash& h, const Circuit& x);

/// Circuit sampling a fresh hash and applying it to its own input vector:
/// inputs [v: in_bits][diag][offset], output (diag, offset, h(v)).
/// The description is emitted so downstream distributions carry the sampled
/// hash alongside its value.
Circuit hash_family_circuit(uint32_t in_bits, uint32_t out_bits);

} // namespace zkdesk
