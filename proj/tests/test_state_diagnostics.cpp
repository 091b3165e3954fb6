#include "qthermo/errors.hpp"
#include "qthermo/state_diagnostics.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace qthermo;
using qthermo::testing::fock_state;
using qthermo::testing::random_density;
using qthermo::testing::thermal_state;

namespace {

// S(r)|0⟩ with S(r) = exp(r(a² − a†²)/2), via the spectrum of the Hermitian
// generator K = i(a² − a†²)/2.
DensityMatrix squeezed_vacuum(double r, int dim) {
    const ComplexMatrix a = annihilation(dim);
    const ComplexMatrix k = Complex(0, 0.5) * (a * a - a.adjoint() * a.adjoint());
    const SpectralDecomposition s = eigh(k);
    ComplexVector phases(dim);
    for (int j = 0; j < dim; ++j) phases[j] = std::exp(Complex(0, -r * s.eigenvalues[j]));
    const ComplexMatrix u = s.eigenvectors * phases.asDiagonal() * s.eigenvectors.adjoint();
    const ComplexVector psi = u.col(0);
    return DensityMatrix{psi * psi.adjoint(), {dim}};
}

double thermal_entropy(double nbar) { return (nbar + 1) * std::log(nbar + 1) - nbar * std::log(nbar); }

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::IoError;
}

} // namespace

TEST_CASE("moments: vacuum") {
    const GaussianSummary s = non_gaussianity(fock_state(0, 12));
    CHECK(s.mean_x == doctest::Approx(0.0));
    CHECK(s.var_x == doctest::Approx(0.5));
    CHECK(s.var_p == doctest::Approx(0.5));
    CHECK(s.cov_xp == doctest::Approx(0.0));
    CHECK(s.kurtosis_x == doctest::Approx(3.0));
    CHECK(s.symplectic_nu == doctest::Approx(0.5));
    CHECK(s.entropy_gaussian == doctest::Approx(0.0));
    CHECK(std::abs(s.delta) <= 1e-12);
}

TEST_CASE("moments: single photon") {
    const GaussianSummary s = non_gaussianity(fock_state(1, 12));
    CHECK(s.var_x == doctest::Approx(1.5));
    CHECK(s.var_p == doctest::Approx(1.5));
    CHECK(s.fourth_x == doctest::Approx(15.0 / 4.0));
    CHECK(s.fourth_p == doctest::Approx(15.0 / 4.0));
    CHECK(s.kurtosis_x == doctest::Approx(5.0 / 3.0));
    CHECK(s.kurtosis_p == doctest::Approx(5.0 / 3.0));
    CHECK(s.symplectic_nu == doctest::Approx(1.5));
    CHECK(s.entropy_state == doctest::Approx(0.0));
    CHECK(s.delta == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
    CHECK(s.delta == doctest::Approx(1.3863).epsilon(1e-4));
}

TEST_CASE("moments: thermal state is Gaussian") {
    const double nbar = 0.582;
    const GaussianSummary s = non_gaussianity(thermal_state(nbar, 60));
    CHECK(s.var_x == doctest::Approx(nbar + 0.5).epsilon(1e-10));
    CHECK(s.kurtosis_x == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(s.symplectic_nu == doctest::Approx(nbar + 0.5).epsilon(1e-10));
    CHECK(s.entropy_state == doctest::Approx(thermal_entropy(nbar)).epsilon(1e-9));
    CHECK(std::abs(s.delta) <= 1e-9);
}

TEST_CASE("gaussian_entropy and von_neumann_entropy examples") {
    CHECK(gaussian_entropy(0.5) == 0.0);
    CHECK(gaussian_entropy(1.5) == doctest::Approx(2.0 * std::log(2.0)));
    // ω = 1, T = 1.
    const double nbar = qthermo::testing::bose(1.0, 1.0);
    CHECK(gaussian_entropy(nbar + 0.5) == doctest::Approx(thermal_entropy(nbar)).epsilon(1e-12));
    CHECK(gaussian_entropy(nbar + 0.5) == doctest::Approx(1.040652).epsilon(1e-6));
    CHECK(von_neumann_entropy(thermal_state(nbar, 80)) == doctest::Approx(1.040652).epsilon(1e-6));

    CHECK(von_neumann_entropy(fock_state(3, 6)) == doctest::Approx(0.0));
    CHECK(von_neumann_entropy(DensityMatrix{ComplexMatrix::Identity(7, 7) / 7.0, {7}}) ==
          doctest::Approx(std::log(7.0)));

    ComplexMatrix bad = ComplexMatrix::Zero(2, 2);
    bad(0, 0) = 1.1;
    bad(1, 1) = -0.1;
    CHECK(code_of([&] { von_neumann_entropy(DensityMatrix{bad, {2}}); }) == ErrorCode::InvalidState);
    ComplexMatrix tiny = ComplexMatrix::Zero(2, 2);
    tiny(0, 0) = 1.0 + 1e-10;
    tiny(1, 1) = -1e-10;
    CHECK(von_neumann_entropy(DensityMatrix{tiny, {2}}) == doctest::Approx(0.0).epsilon(1e-8));
}

TEST_CASE("min_rotated_variance closed form") {
    CHECK(min_rotated_variance(1.0, 1.0, 0.5) == doctest::Approx(0.5));
    CHECK(min_rotated_variance(0.3, 2.0, 0.0) == doctest::Approx(0.3));
    const double vx = 0.8, vp = 1.4, c = 0.3;
    const double expected = 0.5 * (vx + vp) - std::sqrt(0.25 * (vx - vp) * (vx - vp) + c * c);
    CHECK(min_rotated_variance(vx, vp, c) == doctest::Approx(expected));
}

TEST_CASE("squeezing: squeezed vacuum versus vacuum and thermal") {
    const double r = 0.5;
    const GaussianSummary s = quadrature_moments(squeezed_vacuum(r, 50));
    CHECK(s.min_rotated_variance == doctest::Approx(0.5 * std::exp(-2 * r)).epsilon(1e-8));
    CHECK(std::max(s.var_x, s.var_p) == doctest::Approx(0.5 * std::exp(2 * r)).epsilon(1e-8));
    CHECK(squeezing_analysis(s).squeezed);

    const GaussianSummary sq = non_gaussianity(squeezed_vacuum(r, 50));
    CHECK(std::abs(sq.delta) <= 1e-8);
    CHECK(sq.symplectic_nu == doctest::Approx(0.5).epsilon(1e-8));

    CHECK_FALSE(squeezing_analysis(quadrature_moments(fock_state(0, 10))).squeezed);
    CHECK_FALSE(squeezing_analysis(quadrature_moments(thermal_state(0.3, 40))).squeezed);
}

TEST_CASE("uncertainty: symplectic eigenvalue and non-Gaussianity bounds") {
    std::mt19937_64 rng(307);
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_density(10, rng);
        const GaussianSummary s = non_gaussianity(rho);
        CHECK(s.symplectic_nu >= 0.5 - 1e-12);
        CHECK(s.delta >= -1e-10);
        CHECK(s.min_rotated_variance <= std::min(s.var_x, s.var_p) + 1e-12);
    }
}

TEST_CASE("non-Gaussianity of the decoupled probe vanishes") {
    for (double t : {0.08, 0.3}) {
        ModelConfig cfg;
        cfg.temperature = t;
        cfg.b_ext = 0.06;
        cfg.n_a = 20;
        cfg.n_b = 4;
        CHECK(std::abs(non_gaussianity(probe_for(cfg)).delta) <= 1e-6);
    }
}

TEST_CASE("moments: errors") {
    CHECK(code_of([] { quadrature_moments(fock_state(0, 5)); }) == ErrorCode::CutoffTooSmall);
    const DensityMatrix joint{ComplexMatrix::Identity(36, 36) / 36.0, {6, 6}};
    CHECK(code_of([&] { quadrature_moments(joint); }) == ErrorCode::MultiModeState);
}
