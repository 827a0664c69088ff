#include "zkdesk/quantum.hpp"

#include "zkdesk/common.hpp"

#include <doctest.h>

#include <cmath>

using namespace zkdesk;

TEST_CASE("trace distance: identity, pure vs mixed, orthogonal pures") {
    DensityMatrix mixed = totally_mixed(2);
    CHECK(trace_distance(mixed, mixed) == doctest::Approx(0.0));

    for (int n = 1; n <= 4; ++n) {
        Eigen::VectorXcd ground = Eigen::VectorXcd::Zero(1 << n);
        ground(0) = 1.0;
        DensityMatrix pure = pure_state(n, ground);
        CHECK(trace_distance(pure, totally_mixed(n)) ==
              doctest::Approx(1.0 - std::pow(2.0, -n)).epsilon(1e-10));
    }

    Eigen::VectorXcd e0 = Eigen::VectorXcd::Zero(2), e1 = Eigen::VectorXcd::Zero(2);
    e0(0) = 1.0;
    e1(1) = 1.0;
    CHECK(trace_distance(pure_state(1, e0), pure_state(1, e1)) == doctest::Approx(1.0));
}

TEST_CASE("von Neumann entropy: mixed, pure, half-rank") {
    CHECK(von_neumann_entropy(totally_mixed(2)) == doctest::Approx(2.0));
    std::mt19937_64 rng(3);
    CHECK(von_neumann_entropy(random_pure_state(3, rng)) == doctest::Approx(0.0).epsilon(1e-9));

    DensityMatrix half;
    half.qubits = 2;
    Eigen::VectorXd diag(4);
    diag << 0.5, 0.5, 0.0, 0.0;
    half.rho = diag.asDiagonal().toDenseMatrix().cast<std::complex<double>>();
    CHECK(von_neumann_entropy(half) == doctest::Approx(1.0));
}

TEST_CASE("density validation rejects bad matrices") {
    DensityMatrix bad;
    bad.qubits = 1;
    bad.rho = Eigen::MatrixXcd::Zero(2, 2);
    bad.rho(0, 1) = std::complex<double>(0.5, 0.0); // not Hermitian
    bad.rho(0, 0) = 1.0;
    CHECK_THROWS_AS(check_density(bad), PreconditionError);

    DensityMatrix off_trace = totally_mixed(1);
    off_trace.rho *= 1.5;
    CHECK_THROWS_AS(check_density(off_trace), PreconditionError);
}

TEST_CASE("entropy bounds: totally mixed and pure states sit on the bounds") {
    for (int n = 1; n <= 4; ++n) {
        EntropyBoundsReport mixed = fact_check_entropy_bounds(totally_mixed(n));
        CHECK(mixed.lower_ok);
        CHECK(mixed.upper_ok);
        CHECK(mixed.alpha == doctest::Approx(0.0).epsilon(1e-10));
        CHECK(mixed.entropy == doctest::Approx(double(n)));

        std::mt19937_64 rng(17 + n);
        EntropyBoundsReport pure = fact_check_entropy_bounds(random_pure_state(n, rng));
        CHECK(pure.lower_ok);
        CHECK(pure.upper_ok);
        // both sides vanish at the pure-state boundary
        CHECK(std::abs(pure.entropy) <= 1e-9);
        CHECK(std::abs(pure.upper_bound) <= 1e-9);
    }
}

TEST_CASE("the entropy lower bound holds on random and parametric states") {
    std::mt19937_64 rng(23);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            CHECK(fact_check_entropy_bounds(random_mixed_state(n, rng)).lower_ok);
        }
        for (int r = 1; r <= (1 << n); ++r)
            CHECK(fact_check_entropy_bounds(random_rank_deficient(n, r, rng)).lower_ok);
        for (double p : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0})
            CHECK(fact_check_entropy_bounds(depolarized_pure(n, p)).lower_ok);
    }
}

TEST_CASE("the entropy upper bound engages near the boundary, not at moderate distance") {
    // exact at the pure boundary for every n, and satisfied with room for
    // lightly depolarized states once the qubit count grows; a 1-qubit state
    // at distance 1/4 already exceeds it, which is why the desk-scale map
    // resolves instances directly instead of through this direction
    for (int n = 1; n <= 4; ++n)
        CHECK(fact_check_entropy_bounds(depolarized_pure(n, 0.0)).upper_ok);
    for (double p : {0.05, 0.1, 0.2})
        CHECK(fact_check_entropy_bounds(depolarized_pure(3, p)).upper_ok);
    DensityMatrix skew;
    skew.qubits = 1;
    skew.rho = Eigen::MatrixXcd::Zero(2, 2);
    skew.rho(0, 0) = 0.75;
    skew.rho(1, 1) = 0.25;
    EntropyBoundsReport r = fact_check_entropy_bounds(skew);
    CHECK(r.lower_ok);
    CHECK_FALSE(r.upper_ok);
}

TEST_CASE("trace distance is a metric on random triples") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 50; ++trial) {
        DensityMatrix a = random_mixed_state(2, rng);
        DensityMatrix b = random_mixed_state(2, rng);
        DensityMatrix c = random_mixed_state(2, rng);
        double ab = trace_distance(a, b), ba = trace_distance(b, a);
        CHECK(std::abs(ab - ba) <= 1e-12);
        CHECK(trace_distance(a, c) <= ab + trace_distance(b, c) + 1e-9);
        CHECK(trace_distance(a, a) <= 1e-12);
    }
}

TEST_CASE("entropy is unitarily invariant") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        DensityMatrix x = random_mixed_state(2, rng);
        Eigen::MatrixXcd u = random_unitary(4, rng);
        DensityMatrix y;
        y.qubits = 2;
        y.rho = u * x.rho * u.adjoint();
        CHECK(std::abs(von_neumann_entropy(x) - von_neumann_entropy(y)) <= 1e-9);
    }
}

TEST_CASE("closeness-to-uniform maps to the entropy threshold n - 3") {
    // totally mixed: distance 0, entropy n >= n - 2
    QscuToQeaResult mixed = qscu_to_qea_map(totally_mixed(3));
    CHECK(mixed.threshold == 0);
    CHECK(mixed.direct_verdict == QeaRegime::Yes);
    CHECK(von_neumann_entropy(mixed.instance) >= 3.0 - 2.0);

    // pure state: distance 1 - 1/2^n, entropy 0 <= n - 4 for n = 4
    std::mt19937_64 rng(37);
    QscuToQeaResult pure = qscu_to_qea_map(random_pure_state(4, rng));
    CHECK(pure.threshold == 1);
    CHECK(pure.direct_verdict == QeaRegime::No);
    CHECK(von_neumann_entropy(pure.instance) <= 4.0 - 4.0 + 1e-9);
}

TEST_CASE("depolarized family: closed-form spectra match the implementation") {
    const int n = 3;
    const int d = 1 << n;
    for (double p : {0.0, 0.125, 0.25, 0.5, 0.75, 1.0}) {
        DensityMatrix rho = depolarized_pure(n, p);
        // eigenvalues: (1-p) + p/d once, p/d with multiplicity d-1
        double big = (1.0 - p) + p / d, small = p / d;
        double expect_entropy = 0.0;
        if (big > 0) expect_entropy -= big * std::log2(big);
        if (small > 0) expect_entropy -= (d - 1) * small * std::log2(small);
        CHECK(von_neumann_entropy(rho) == doctest::Approx(expect_entropy).epsilon(1e-9));
        double expect_td = (1.0 - p) * (1.0 - 1.0 / d);
        CHECK(trace_distance(rho, totally_mixed(n)) ==
              doctest::Approx(expect_td).epsilon(1e-9));
        // regimes from the map agree with the direct computation
        QscuToQeaResult mapped = qscu_to_qea_map(rho);
        if (expect_td <= 1.0 / n) CHECK(mapped.direct_verdict == QeaRegime::Yes);
        if (expect_td >= 1.0 - 1.0 / n) CHECK(mapped.direct_verdict == QeaRegime::No);
    }
}

TEST_CASE("JSON round trip preserves the matrix") {
    std::mt19937_64 rng(41);
    DensityMatrix x = random_mixed_state(2, rng);
    DensityMatrix back = density_from_json(density_to_json(x));
    CHECK(back.qubits == x.qubits);
    CHECK((back.rho - x.rho).cwiseAbs().maxCoeff() <= 1e-12);
}
