#include "zkdesk/quantum.hpp"

#include "zkdesk/common.hpp"

#include <json.hpp>

#include <cmath>

namespace zkdesk {

void check_density(const DensityMatrix& x) {
    if (x.qubits < 1 || x.qubits > 12) throw PreconditionError("qubit count out of range");
    const int d = x.dim();
    if (x.rho.rows() != d || x.rho.cols() != d)
        throw PreconditionError("density matrix dimension does not match qubit count");
    if ((x.rho - x.rho.adjoint()).cwiseAbs().maxCoeff() > kDensityTol)
        throw PreconditionError("density matrix is not Hermitian within tolerance");
    if (std::abs(x.rho.trace().real() - 1.0) > kDensityTol ||
        std::abs(x.rho.trace().imag()) > kDensityTol)
        throw PreconditionError("density matrix trace is not 1 within tolerance");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.rho, Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() < -kDensityTol)
        throw PreconditionError("density matrix has a negative eigenvalue beyond tolerance");
}

DensityMatrix totally_mixed(int qubits) {
    DensityMatrix x;
    x.qubits = qubits;
    const int d = 1 << qubits;
    x.rho = Eigen::MatrixXcd::Identity(d, d) / double(d);
    return x;
}

DensityMatrix pure_state(int qubits, const Eigen::VectorXcd& amplitudes) {
    DensityMatrix x;
    x.qubits = qubits;
    Eigen::VectorXcd v = amplitudes / amplitudes.norm();
    x.rho = v * v.adjoint();
    return x;
}

double trace_distance(const DensityMatrix& x, const DensityMatrix& y) {
    if (x.qubits != y.qubits) throw PreconditionError("trace distance: dimension mismatch");
    check_density(x);
    check_density(y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.rho - y.rho, Eigen::EigenvaluesOnly);
    return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double von_neumann_entropy(const DensityMatrix& x) {
    check_density(x);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(x.rho, Eigen::EigenvaluesOnly);
    double h = 0;
    for (int i = 0; i < es.eigenvalues().size(); ++i) {
        double lambda = std::max(0.0, es.eigenvalues()[i]);
        if (lambda > 0) h -= lambda * std::log2(lambda);
    }
    return h;
}

EntropyBoundsReport fact_check_entropy_bounds(const DensityMatrix& x) {
    EntropyBoundsReport rep;
    const int n = x.qubits;
    rep.alpha = trace_distance(x, totally_mixed(n));
    rep.entropy = von_neumann_entropy(x);
    rep.lower_bound = double(n) * (1.0 - rep.alpha - std::pow(2.0, -double(n)));
    rep.upper_bound = rep.alpha < 1.0
                          ? double(n) - std::log2(1.0 / (1.0 - rep.alpha))
                          : std::numeric_limits<double>::infinity();
    rep.lower_margin = rep.entropy - rep.lower_bound;
    rep.upper_margin = rep.upper_bound - rep.entropy;
    rep.lower_ok = rep.lower_margin >= -1e-9;
    rep.upper_ok = rep.upper_margin >= -1e-9;
    return rep;
}

QscuToQeaResult qscu_to_qea_map(const DensityMatrix& x) {
    check_density(x);
    QscuToQeaResult res;
    res.instance = x;
    res.threshold = x.qubits - 3;
    res.trace_dist_to_mixed = trace_distance(x, totally_mixed(x.qubits));
    // below the small-case cutoff the instance resolves directly
    const double n = double(x.qubits);
    if (res.trace_dist_to_mixed <= 1.0 / n)
        res.direct_verdict = QeaRegime::Yes;
    else if (res.trace_dist_to_mixed >= 1.0 - 1.0 / n)
        res.direct_verdict = QeaRegime::No;
    else
        res.direct_verdict = QeaRegime::Outside;
    return res;
}

namespace {

Eigen::MatrixXcd ginibre(int rows, int cols, std::mt19937_64& rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g(i, j) = std::complex<double>(normal(rng), normal(rng));
    return g;
}

} // namespace

DensityMatrix random_mixed_state(int qubits, std::mt19937_64& rng) {
    const int d = 1 << qubits;
    Eigen::MatrixXcd g = ginibre(d, d, rng);
    Eigen::MatrixXcd w = g * g.adjoint();
    DensityMatrix x;
    x.qubits = qubits;
    x.rho = w / w.trace().real();
    return x;
}

DensityMatrix random_pure_state(int qubits, std::mt19937_64& rng) {
    const int d = 1 << qubits;
    return pure_state(qubits, ginibre(d, 1, rng).col(0));
}

DensityMatrix depolarized_pure(int qubits, double p) {
    const int d = 1 << qubits;
    Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(d);
    ground(0) = 1.0;
    DensityMatrix x;
    x.qubits = qubits;
    x.rho = (1.0 - p) * (ground * ground.adjoint()) +
            p * Eigen::MatrixXcd::Identity(d, d) / double(d);
    return x;
}

DensityMatrix random_rank_deficient(int qubits, int rank, std::mt19937_64& rng) {
    const int d = 1 << qubits;
    if (rank < 1 || rank > d) throw PreconditionError("rank out of range");
    Eigen::MatrixXcd g = ginibre(d, rank, rng);
    Eigen::MatrixXcd w = g * g.adjoint();
    DensityMatrix x;
    x.qubits = qubits;
    x.rho = w / w.trace().real();
    return x;
}

Eigen::MatrixXcd random_unitary(int dim, std::mt19937_64& rng) {
    Eigen::MatrixXcd g = ginibre(dim, dim, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ();
    Eigen::MatrixXcd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < dim; ++i) {
        std::complex<double> diag = r(i, i);
        q.col(i) *= diag / std::abs(diag);
    }
    return q;
}

std::string density_to_json(const DensityMatrix& x) {
    nlohmann::ordered_json j;
    j["qubits"] = x.qubits;
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    const int d = x.dim();
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k)
            entries.push_back({x.rho(i, k).real(), x.rho(i, k).imag()});
    j["entries"] = std::move(entries);
    return j.dump(2);
}

DensityMatrix density_from_json(const std::string& text) {
    nlohmann::ordered_json j = nlohmann::ordered_json::parse(text);
    DensityMatrix x;
    x.qubits = j.at("qubits").get<int>();
    const int d = x.dim();
    const auto& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != d * d)
        throw PreconditionError("density JSON entry count does not match dimension");
    x.rho = Eigen::MatrixXcd(d, d);
    int idx = 0;
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
            x.rho(i, k) = std::complex<double>(entries[idx][0].get<double>(),
                                               entries[idx][1].get<double>());
            ++idx;
        }
    return x;
}

} // namespace zkdesk
