#include "qthermo/bosonic_model.hpp"
#include "qthermo/errors.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qthermo;

namespace {

int idx(const ModelConfig& cfg, int m, int k) { return m * cfg.n_b + k; }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::IoError;
}

ModelConfig small(Interaction kind, double g, double b) {
    ModelConfig cfg;
    cfg.interaction = kind;
    cfg.g = g;
    cfg.b_ext = b;
    cfg.n_a = 3;
    cfg.n_b = 2;
    return cfg;
}

} // namespace

TEST_CASE("annihilation operator entries") {
    ComplexMatrix two(2, 2);
    two << 0.0, 1.0, 0.0, 0.0;
    CHECK(max_abs(annihilation(2) - two) == 0.0);

    const ComplexMatrix a3 = annihilation(3);
    CHECK(a3(0, 1).real() == doctest::Approx(1.0));
    CHECK(a3(1, 2).real() == doctest::Approx(std::sqrt(2.0)));
    CHECK((a3.cwiseAbs().array() > 0).count() == 2);

    CHECK(code_of([] { annihilation(1); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("truncated commutators [a, a†] and [X, P]") {
    const int n = 20;
    const ComplexMatrix a = annihilation(n);
    const ComplexMatrix comm = a * a.adjoint() - a.adjoint() * a;
    for (int k = 0; k < n - 1; ++k) CHECK(comm(k, k).real() == doctest::Approx(1.0));
    CHECK(comm(n - 1, n - 1).real() == doctest::Approx(-19.0));

    const Quadratures q = quadratures(n);
    const ComplexMatrix xp = q.x * q.p - q.p * q.x;
    for (int k = 0; k < n - 1; ++k) CHECK(std::abs(xp(k, k) - Complex(0.0, 1.0)) <= 1e-12);
    CHECK(std::abs(xp(n - 1, n - 1) - Complex(0.0, 1.0)) > 1.0);
    ComplexMatrix off = xp;
    off.diagonal().setZero();
    CHECK(max_abs(off) <= 1e-12);
}

TEST_CASE("quadratures: definitions and vacuum variance") {
    const Quadratures q2 = quadratures(2);
    CHECK(q2.x(0, 1).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(q2.x(1, 0).real() == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(q2.x(0, 0) == Complex(0.0, 0.0));
    for (int dim : {2, 5, 30}) {
        const Quadratures q = quadratures(dim);
        CHECK((q.x * q.x)(0, 0).real() == doctest::Approx(0.5));
        CHECK(q.x.imag().cwiseAbs().maxCoeff() == 0.0);
        CHECK(hermiticity_error(q.p) <= 1e-15);
        CHECK(q.p.real().cwiseAbs().maxCoeff() <= 1e-15);
    }
    CHECK(code_of([] { quadratures(1); }) == ErrorCode::InvalidDimension);
}

TEST_CASE("build_hamiltonian: decoupled oscillators are diagonal") {
    ModelConfig cfg;
    cfg.n_a = 4;
    cfg.n_b = 5;
    cfg.omega_b = 0.3;
    const ComplexMatrix h = build_hamiltonian(cfg);
    for (int m = 0; m < cfg.n_a; ++m)
        for (int k = 0; k < cfg.n_b; ++k)
            CHECK(h(idx(cfg, m, k), idx(cfg, m, k)).real() == doctest::Approx(cfg.omega_a * m + cfg.omega_b * k));
    ComplexMatrix off = h;
    off.diagonal().setZero();
    CHECK(max_abs(off) == 0.0);
}

TEST_CASE("build_hamiltonian: quadratic coupling matrix element by ladder expansion") {
    const ModelConfig cfg = small(Interaction::Quadratic, 0.07, 0.0);
    const ComplexMatrix h = build_hamiltonian(cfg);
    // (a†)²|0⟩ = √2|2⟩ and b†|0⟩ = |1⟩.
    CHECK(h(idx(cfg, 2, 1), idx(cfg, 0, 0)).real() == doctest::Approx(0.07 * std::sqrt(2.0)));
    // (a + a†)² has ⟨0|·|0⟩ = 1: ⟨0,1|H|0,0⟩ = g.
    CHECK(h(idx(cfg, 0, 1), idx(cfg, 0, 0)).real() == doctest::Approx(0.07));
}

TEST_CASE("build_hamiltonian: radiation-pressure elements, vacuum of A decouples") {
    const ModelConfig cfg = small(Interaction::RadiationPressure, 0.05, 0.0);
    const ComplexMatrix h = build_hamiltonian(cfg);
    CHECK(h(idx(cfg, 1, 1), idx(cfg, 1, 0)).real() == doctest::Approx(0.05));
    for (int k = 0; k < cfg.n_b; ++k)
        for (int kp = 0; kp < cfg.n_b; ++kp)
            if (k != kp) CHECK(h(idx(cfg, 0, k), idx(cfg, 0, kp)) == Complex(0.0, 0.0));
}

TEST_CASE("build_hamiltonian: field drive enters as B_ext (b + b†) on resonator B") {
    const ModelConfig cfg = small(Interaction::Quadratic, 0.0, 0.3);
    const ComplexMatrix h = build_hamiltonian(cfg);
    for (int m = 0; m < cfg.n_a; ++m) CHECK(h(idx(cfg, m, 1), idx(cfg, m, 0)).real() == doctest::Approx(0.3));
}

TEST_CASE("build_hamiltonian: Hermitian for a range of configs; g=0 is model independent") {
    for (Interaction kind : {Interaction::Quadratic, Interaction::RadiationPressure})
        for (double g : {0.0, 0.02, 0.08, 0.3})
            for (double b : {0.0, 0.06}) {
                ModelConfig cfg = small(kind, g, b);
                cfg.n_a = 6;
                cfg.n_b = 5;
                CHECK(hermiticity_error(build_hamiltonian(cfg)) <= 1e-12);
            }
    ModelConfig q = small(Interaction::Quadratic, 0.0, 0.06);
    ModelConfig r = small(Interaction::RadiationPressure, 0.0, 0.06);
    CHECK(max_abs(build_hamiltonian(q) - build_hamiltonian(r)) == 0.0);
}

TEST_CASE("ModelConfig validation") {
    ModelConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    auto bad = [](auto mutate) {
        ModelConfig c;
        mutate(c);
        return code_of([&] { c.validate(); });
    };
    CHECK(bad([](ModelConfig& c) { c.temperature = 0.0; }) == ErrorCode::InvalidConfig);
    CHECK(bad([](ModelConfig& c) { c.omega_b = -1.0; }) == ErrorCode::InvalidConfig);
    CHECK(bad([](ModelConfig& c) { c.g = -0.1; }) == ErrorCode::InvalidConfig);
    CHECK(bad([](ModelConfig& c) { c.b_ext = -0.1; }) == ErrorCode::InvalidConfig);
    CHECK(bad([](ModelConfig& c) { c.n_b = 1; }) == ErrorCode::InvalidDimension);
    ModelConfig negative_field;
    negative_field.b_ext = -0.1;
    CHECK_NOTHROW(negative_field.validate(true));
}

TEST_CASE("gibbs_state: two-level Boltzmann weights") {
    ComplexMatrix h = ComplexMatrix::Zero(2, 2);
    h(1, 1) = 1.0;
    const DensityMatrix rho = gibbs_state(h, 1.0);
    const double e = std::exp(-1.0);
    CHECK(rho.matrix(0, 0).real() == doctest::Approx(1.0 / (1.0 + e)).epsilon(1e-12));
    CHECK(rho.matrix(1, 1).real() == doctest::Approx(e / (1.0 + e)).epsilon(1e-12));
    CHECK(rho.matrix(0, 0).real() == doctest::Approx(0.7311).epsilon(1e-4));
}

TEST_CASE("gibbs_state: infinite-temperature limit, commutation with H, monotone populations") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 4; ++trial) {
        const ComplexMatrix h = qthermo::testing::random_hermitian(6, rng);
        const DensityMatrix hot = gibbs_state(h, 1e6 * max_abs(h));
        CHECK(max_abs(hot.matrix - ComplexMatrix::Identity(6, 6) / 6.0) <= 1e-5);

        const DensityMatrix rho = gibbs_state(h, 0.7);
        CHECK(max_abs(h * rho.matrix - rho.matrix * h) <= 1e-10);
        CHECK(std::abs(rho.matrix.trace().real() - 1.0) <= 1e-12);

        const SpectralDecomposition s = eigh(h);
        const ComplexMatrix pops = s.eigenvectors.adjoint() * rho.matrix * s.eigenvectors;
        for (int k = 1; k < 6; ++k) CHECK(pops(k, k).real() <= pops(k - 1, k - 1).real() + 1e-15);
    }
    CHECK(code_of([] { gibbs_state(ComplexMatrix::Identity(2, 2), 0.0); }) == ErrorCode::NonPositiveTemperature);
    ComplexMatrix nh = ComplexMatrix::Zero(2, 2);
    nh(0, 1) = 1.0;
    CHECK(code_of([&] { gibbs_state(nh, 1.0); }) == ErrorCode::NotHermitian);
}

TEST_CASE("gibbs_state: ground shift keeps very low temperatures finite") {
    ModelConfig cfg;
    cfg.g = 0.08;
    cfg.b_ext = 0.06;
    cfg.temperature = 0.01;
    cfg.n_a = 8;
    cfg.n_b = 8;
    const DensityMatrix rho = gibbs_state(build_hamiltonian(cfg), cfg.temperature, {8, 8});
    CHECK(rho.matrix.allFinite());
    CHECK(std::abs(rho.matrix.trace().real() - 1.0) <= 1e-12);
    CHECK_NOTHROW(DensityMatrix::checked(rho.matrix, rho.dims));
}

TEST_CASE("probe_state: decoupled probe is thermal and independent of the field") {
    ModelConfig cfg;
    cfg.temperature = 0.4;
    cfg.n_a = 12;
    cfg.n_b = 6;
    const DensityMatrix probe = probe_for(cfg);
    double z = 0.0;
    for (int n = 0; n < cfg.n_a; ++n) z += std::exp(-cfg.omega_a * n / cfg.temperature);
    for (int n = 0; n < cfg.n_a; ++n)
        CHECK(probe.matrix(n, n).real() == doctest::Approx(std::exp(-cfg.omega_a * n / cfg.temperature) / z).epsilon(1e-10));

    ModelConfig driven = cfg;
    driven.b_ext = 0.37;
    CHECK(max_abs(probe_for(driven).matrix - probe.matrix) <= 1e-12);
    CHECK(probe.dims == ModeDims{12});
}

TEST_CASE("probe_state: trace preserved and factorization checked") {
    for (Interaction kind : {Interaction::Quadratic, Interaction::RadiationPressure})
        for (double g : {0.02, 0.08}) {
            ModelConfig cfg;
            cfg.interaction = kind;
            cfg.g = g;
            cfg.b_ext = 0.04;
            cfg.temperature = 0.06;
            cfg.n_a = 12;
            cfg.n_b = 12;
            const DensityMatrix p = probe_for(cfg);
            CHECK(std::abs(p.matrix.trace().real() - 1.0) <= 1e-10);
            CHECK_NOTHROW(DensityMatrix::checked(p.matrix, p.dims));
        }
    ModelConfig cfg;
    cfg.n_a = 3;
    cfg.n_b = 3;
    const DensityMatrix wrong{ComplexMatrix::Identity(9, 9) / 9.0, {9}};
    CHECK(code_of([&] { probe_state(wrong, cfg); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("DensityMatrix::checked rejects invalid states") {
    CHECK(code_of([] { DensityMatrix::checked(ComplexMatrix::Identity(2, 2), {2}); }) == ErrorCode::InvalidState);
    ComplexMatrix neg = ComplexMatrix::Zero(2, 2);
    neg(0, 0) = 1.5;
    neg(1, 1) = -0.5;
    CHECK(code_of([&] { DensityMatrix::checked(neg, {2}); }) == ErrorCode::InvalidState);
    CHECK(code_of([] { DensityMatrix::checked(ComplexMatrix::Identity(4, 4) / 4.0, {3}); }) ==
          ErrorCode::DimensionMismatch);
}

TEST_CASE("cutoff convergence of a weakly coupled probe") {
    // Moderate regime where the truncated model converges: +5 levels leaves the
    // low-lying probe block unchanged to high accuracy.
    ModelConfig cfg;
    cfg.interaction = Interaction::RadiationPressure;
    cfg.g = 0.02;
    cfg.omega_b = 0.5;
    cfg.b_ext = 0.04;
    cfg.temperature = 0.3;
    cfg.n_a = 10;
    cfg.n_b = 10;
    const DensityMatrix base = probe_for(cfg);
    ModelConfig bigger = cfg;
    bigger.n_a += 5;
    bigger.n_b += 5;
    const DensityMatrix big = probe_for(bigger);
    CHECK(max_abs(big.matrix.topLeftCorner(10, 10) - base.matrix) <= 1e-8);
}

TEST_CASE("reduced_gibbs_state equals the partial trace of the joint Gibbs state") {
    for (Interaction kind : {Interaction::Quadratic, Interaction::RadiationPressure}) {
        ModelConfig cfg;
        cfg.interaction = kind;
        cfg.g = 0.06;
        cfg.b_ext = 0.05;
        cfg.temperature = 0.15;
        cfg.n_a = 7;
        cfg.n_b = 5;
        const ComplexMatrix h = build_hamiltonian(cfg);
        const DensityMatrix oracle = probe_state(gibbs_state(h, cfg.temperature, {7, 5}), cfg);
        const DensityMatrix direct = reduced_gibbs_state(eigh(h), cfg.temperature, cfg);
        CHECK(max_abs(direct.matrix - oracle.matrix) <= 1e-13);
        CHECK(direct.dims == ModeDims{7});
    }
}
