#pragma once

#include "zkdesk/dist.hpp"
#include "zkdesk/rational.hpp"

#include <functional>
#include <optional>
#include <random>

namespace zkdesk {

/// Non-interactive protocol with trusted help. The Dealer publishes a help
/// string; the Prover answers with one message; the Verifier applies a
/// predicate to (help, message). Messages carry a leading abort flag (an
/// abort counts as a reject). The simulator emits (help, abort=0, message)
/// views in one shot.
struct ProtocolSpec {
    Circuit dealer;    // outputs help (width = help_bits)
    Circuit preimage;  // the circuit the honest prover inverts (help = preimage(r))
    Circuit verifier;  // inputs: help ++ [abort] ++ message, one output bit
    Circuit simulator; // outputs help ++ [abort] ++ message

    uint32_t help_bits = 0;
    uint32_t message_bits = 0; // r-bits, excluding the abort flag

    uint32_t view_width() const { return help_bits + 1 + message_bits; }
};

/// Optional cheating strategy: help -> (abort, message).
using ProverStrategy = std::function<std::pair<bool, uint64_t>(uint64_t help)>;

/// The help-based protocol for image-intersection instances:
///   Dealer samples x' from X' and reveals it;
///   the honest Prover sends a uniformly random r with Y'(r) = x' (abort if
///   none exists);
///   the Verifier recomputes Y'(r) and accepts iff it equals the help;
///   the Simulator draws r uniformly and outputs (Y'(r), r).
/// The pair is expected to be polarized; the construction itself only needs
/// matching widths.
ProtocolSpec build_iid_protocol(const Circuit& x_polarized, const Circuit& y_polarized,
                                uint32_t budget = budget_bits());

struct ProtocolReport {
    Rational completeness; // honest-prover accept probability
    Rational soundness;    // optimal cheating prover accept probability
    Rational deviation;    // SD(real view, simulated view)
    Rational abort_mass;   // honest-prover abort probability
};

/// Exact measurement by enumeration: the real view distribution uses the
/// honest prover (uniform over preimages, distinguished abort otherwise);
/// soundness maximizes the verifier over every message per help value.
ProtocolReport measure(const ProtocolSpec& spec, uint32_t budget = budget_bits());

/// Real (help, abort, message) view distribution under the honest prover.
ExactDist real_view_dist(const ProtocolSpec& spec, uint32_t budget = budget_bits());
ExactDist simulated_view_dist(const ProtocolSpec& spec, uint32_t budget = budget_bits());

struct ProtocolRun {
    uint64_t help = 0;
    bool aborted = false;
    uint64_t message = 0;
    bool accepted = false;
    uint64_t simulated_view = 0; // packed help ++ abort ++ message
};

/// Samples one execution (honest prover unless a strategy is supplied).
ProtocolRun run_protocol_once(const ProtocolSpec& spec, std::mt19937_64& rng,
                              const std::optional<ProverStrategy>& strategy = std::nullopt,
                              uint32_t budget = budget_bits());

} // namespace zkdesk
