#pragma once

#include "zkdesk/common.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zkdesk {

enum class GateOp : uint8_t { And, Or, Xor, Not, Const0, Const1 };

const char* gate_op_name(GateOp op);
uint32_t gate_op_arity(GateOp op);

/// Reference to either a primary input bit or the output of an earlier gate.
struct WireRef {
    enum class Kind : uint8_t { Input, Gate };
    Kind kind = Kind::Input;
    uint32_t index = 0;

    static WireRef input(uint32_t i) { return {Kind::Input, i}; }
    static WireRef gate(uint32_t i) { return {Kind::Gate, i}; }
    bool operator==(const WireRef&) const = default;
};

struct Gate {
    GateOp op = GateOp::Const0;
    WireRef a{};
    WireRef b{};
};

/// A boolean circuit read as a probability distribution: feeding the
/// n_inputs wires with uniform bits induces a distribution on the
/// m output bits. Values are immutable once built and safe to share.
struct Circuit {
    uint32_t n_inputs = 0;
    std::vector<Gate> gates;
    std::vector<WireRef> outputs;

    uint32_t width() const { return static_cast<uint32_t>(outputs.size()); }

    /// Deterministic evaluation on one assignment. Requires a valid circuit
    /// and in.size() == n_inputs; output has width() entries of 0/1.
    std::vector<uint8_t> evaluate(const std::vector<uint8_t>& in) const;

    /// Fast path for enumeration: input assignment packed in a word
    /// (bit i = input i), output packed likewise. Requires n_inputs <= 64
    /// and width() <= 64.
    uint64_t evaluate_u64(uint64_t in) const;

    /// Evaluates the 64 consecutive assignments base..base+63 at once.
    /// out_words[k] holds output bit k across lanes: bit j of out_words[k]
    /// is output bit k of assignment base+j. Requires base % 64 == 0.
    void evaluate_block(uint64_t base, std::vector<uint64_t>& out_words) const;
};

struct Violation {
    std::string message;
    std::string location;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

/// Checks every structural invariant: argument references resolve and point
/// only to inputs or strictly earlier gates, outputs resolve, width >= 1.
/// Violations are data, not failures.
ValidationReport validate(const Circuit& c);

/// Throws PreconditionError when validate(c) reports violations.
void require_valid(const Circuit& c);

// --- small builders used across the library and tests ---

/// m wires copied straight from the first m inputs.
Circuit identity_circuit(uint32_t m);

/// No inputs; outputs the given constant bit pattern (width = bits.size()).
Circuit constant_circuit(const std::vector<uint8_t>& bits);

} // namespace zkdesk
