#pragma once

#include <Eigen/Dense>

#include <complex>
#include <random>
#include <string>

namespace zkdesk {

/// Density matrix on `qubits` qubits (dimension 2^qubits). Invariants are
/// numerical: Hermitian and unit trace within 1e-10, eigenvalues >= -1e-10.
struct DensityMatrix {
    int qubits = 0;
    Eigen::MatrixXcd rho;

    int dim() const { return 1 << qubits; }
};

inline constexpr double kDensityTol = 1e-10;

/// Throws PreconditionError when the invariants fail.
void check_density(const DensityMatrix& x);

DensityMatrix totally_mixed(int qubits);
DensityMatrix pure_state(int qubits, const Eigen::VectorXcd& amplitudes);

/// Half the sum of absolute eigenvalues of X - Y.
double trace_distance(const DensityMatrix& x, const DensityMatrix& y);

/// -sum lambda log2 lambda, eigenvalues clipped at zero.
double von_neumann_entropy(const DensityMatrix& x);

struct EntropyBoundsReport {
    double alpha = 0;        // trace distance to the totally mixed state
    double entropy = 0;      // S(X) in bits
    double lower_bound = 0;  // n (1 - alpha - 1/2^n)
    double upper_bound = 0;  // n - log2(1 / (1 - alpha)), +inf at alpha = 1
    double lower_margin = 0; // entropy - lower_bound
    double upper_margin = 0; // upper_bound - entropy
    bool lower_ok = false;
    bool upper_ok = false;
};

/// Evaluates both entropy/trace-distance implications with alpha = beta set
/// to the state's measured distance from the totally mixed state. The lower
/// bound holds on every state; the upper bound is tight at the pure-state
/// boundary but fails at moderate distances for small qubit counts (it is
/// only engaged above the small-case cutoff), so both margins are reported
/// and flagged separately.
EntropyBoundsReport fact_check_entropy_bounds(const DensityMatrix& x);

enum class QeaRegime : uint8_t { Yes, No, Outside };

struct QscuToQeaResult {
    DensityMatrix instance;
    int threshold = 0; // t = n - 3
    double trace_dist_to_mixed = 0;
    QeaRegime direct_verdict = QeaRegime::Outside; // resolved directly at desk scale
};

/// Maps a closeness-to-uniform instance to an entropy-approximation instance
/// with threshold n - 3. Below the small-case cutoff (16 qubits) the
/// instance is also resolved directly from the computed trace distance.
QscuToQeaResult qscu_to_qea_map(const DensityMatrix& x);

// --- seeded state generators for fact checking ---

DensityMatrix random_mixed_state(int qubits, std::mt19937_64& rng);  // Wishart-style
DensityMatrix random_pure_state(int qubits, std::mt19937_64& rng);
DensityMatrix depolarized_pure(int qubits, double p); // (1-p)|0..0><0..0| + p I/2^n
DensityMatrix random_rank_deficient(int qubits, int rank, std::mt19937_64& rng);
Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng);

/// JSON (de)serialization: row-major array of [re, im] pairs.
std::string density_to_json(const DensityMatrix& x);
DensityMatrix density_from_json(const std::string& text);

} // namespace zkdesk
