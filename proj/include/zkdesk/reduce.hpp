#pragma once

#include "zkdesk/ops.hpp"
#include "zkdesk/prob_circuit.hpp"
#include "zkdesk/protocol.hpp"

#include <json.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace zkdesk {

enum class Problem : uint8_t { SD, IID, MutIID, EA, EABar, EDBar };
enum class Regime : uint8_t { Yes, No, Unknown };

const char* problem_name(Problem p);
const char* regime_name(Regime r);

/// A pair of circuit distributions together with its promise-problem reading.
/// The regime label is attached only when a generator or reduction can
/// certify it (by enumeration or by the composition laws).
struct PromisePair {
    Circuit x;
    Circuit y;
    Problem problem = Problem::SD;
    Rational a{0};
    Rational b{0};
    int t = 0; // entropy threshold for EA-style problems
    Regime regime = Regime::Unknown;
    std::string certificate; // how the regime label was established
};

struct ReductionTrace {
    std::string reduction;
    nlohmann::ordered_json params;
    nlohmann::ordered_json measured;
};

// --- EA-bar -> IID (flattening + hashing) ---

struct EaBarResult {
    PromisePair pair; // (Z, Z'), an IID instance
    ReductionTrace trace;
};

/// Z = X^{(x)s} (x) I and Z' hashing the source randomness:
///   Z' : r -> (X^{(x)s}(r), diag, offset, h(r, u))
/// with h a fresh Toeplitz-affine hash from m'+st to m' bits. Low-entropy
/// inputs make the hashed set cover the range (SD small); high-entropy
/// inputs make it miss most of it (Disj large). The regime is certified by
/// computing H(X) when enumeration fits the budget.
EaBarResult ea_bar_to_iid(const Circuit& x, uint32_t t, uint32_t s, uint32_t k,
                          uint32_t budget = budget_bits());

// --- IID -> mut-IID (append the selector) ---

/// A : pick b, return (X_b(r), b);  B : pick b, return (X_b(r), not b).
/// SD is preserved exactly and both disjointness directions average, which
/// turns IID^{a,2b} into mut-IID^{a,b} for b > a.
PromisePair iid_to_mut_iid(const Circuit& x0, const Circuit& x1);

// --- boolean closures ---

/// Tensors the pairs; all-Yes stays Yes (SD is subadditive), any-No stays No
/// (mutual disjointness only grows under tensoring).
PromisePair and_closure(const std::vector<PromisePair>& pairs);

/// Applies the two-pair selector construction; either-Yes gives Yes and
/// both-No gives No by the product laws.
PromisePair or_closure(const PromisePair& p0, const PromisePair& p1);

// --- ED-bar decomposition and assembly ---

struct EdBarSkeleton {
    Circuit x_tripled;
    Circuit y_tripled;
    uint32_t t = 0; // entropy threshold of this OR(EA-bar^t, EA^t) instance
};

/// Emits one skeleton per output wire of the (tripled) circuits. When
/// pre_tripled is false the inputs are tensored three times first.
std::vector<EdBarSkeleton> ed_bar_decompose(const Circuit& x, const Circuit& y,
                                            bool pre_tripled = false);

/// Supplies the EA^t side of a skeleton as a certified mut-IID pair.
using EaSideReduction = std::function<PromisePair(const Circuit& y_tripled, uint32_t t)>;

struct EdBarAssembly {
    PromisePair pair;
    ReductionTrace trace;
};

/// Per threshold t: reduce the EA-bar side (ea_bar_to_iid then
/// iid_to_mut_iid), obtain the EA side from the supplied reduction,
/// or-close the two, then and-close across all t. Throws PreconditionError
/// when the EA-side reduction is absent (it is a pluggable dependency).
EdBarAssembly ed_bar_assemble(const Circuit& x, const Circuit& y, const EaSideReduction& ea_side,
                              uint32_t s, uint32_t k, bool pre_tripled = false);

// --- protocol -> IID^q compiler ---

struct ProtocolToIidResult {
    ProbabilisticCircuit d0; // the Dealer's help distribution (tagged)
    ProbabilisticCircuit d1; // majority-filtered simulator output, bottom on reject
    ReductionTrace trace;
};

/// D0 runs the Dealer. D1 runs the simulator k times with shared coins
/// (fresh per-run noise only), applies the verifier to each copy, and
/// outputs the first help when the majority accepts, bottom otherwise.
/// Bottom is a reserved tag-bit pattern, mirroring the gamma convention.
/// sim_shared_bits splits the simulator's inputs into shared coins and
/// per-run noise; k must be odd.
ProtocolToIidResult protocol_to_iid(const ProtocolSpec& spec, uint32_t k,
                                    uint32_t sim_shared_bits);

} // namespace zkdesk
