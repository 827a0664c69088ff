#pragma once

#include "zkdesk/circuit.hpp"

#include <vector>

namespace zkdesk {

/// Circuit composition helpers shared by the distribution operators and the
/// reductions. All of them append gates to dst and hand back wire refs.

WireRef add_gate(Circuit& dst, GateOp op, WireRef a = {}, WireRef b = {});

inline WireRef const0(Circuit& dst) { return add_gate(dst, GateOp::Const0); }
inline WireRef const1(Circuit& dst) { return add_gate(dst, GateOp::Const1); }
inline WireRef not_of(Circuit& dst, WireRef a) { return add_gate(dst, GateOp::Not, a); }

/// Copies src's gates into dst, reading src input i from in_refs[i].
/// Returns the refs of src's outputs inside dst.
std::vector<WireRef> embed(Circuit& dst, const Circuit& src, const std::vector<WireRef>& in_refs);

/// Per-bit (sel ? when1 : when0). Vectors must have equal length.
std::vector<WireRef> mux_bits(Circuit& dst, WireRef sel, const std::vector<WireRef>& when0,
                              const std::vector<WireRef>& when1);

/// Comparator: 1 iff the little-endian integer on `bits` is < constant.
WireRef less_than_const(Circuit& dst, const std::vector<WireRef>& bits, uint64_t constant);

/// Refs for a consecutive range of dst's primary inputs.
std::vector<WireRef> input_range(uint32_t first, uint32_t count);

} // namespace zkdesk
