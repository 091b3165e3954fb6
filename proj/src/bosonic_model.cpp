#include "qthermo/bosonic_model.hpp"

#include "qthermo/errors.hpp"

#include <cmath>
#include <string>

namespace qthermo {

std::string_view to_string(Interaction kind) noexcept {
    return kind == Interaction::Quadratic ? "quadratic" : "radiation_pressure";
}

Interaction parse_interaction(std::string_view name) {
    if (name == "quadratic") return Interaction::Quadratic;
    if (name == "radiation_pressure") return Interaction::RadiationPressure;
    throw Error(ErrorCode::InvalidConfig, "unknown interaction '" + std::string(name) + "'");
}

void ModelConfig::validate(bool allow_negative_field) const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); };
    if (!(omega_a > 0.0) || !std::isfinite(omega_a)) fail("omega_a must be > 0");
    if (!(omega_b > 0.0) || !std::isfinite(omega_b)) fail("omega_b must be > 0");
    if (!(temperature > 0.0) || !std::isfinite(temperature)) fail("temperature must be > 0");
    if (!(g >= 0.0) || !std::isfinite(g)) fail("g must be >= 0");
    if (!std::isfinite(b_ext) || (!allow_negative_field && b_ext < 0.0)) fail("b_ext must be >= 0");
    if (n_a < 2 || n_b < 2)
        throw Error(ErrorCode::InvalidDimension, "Fock cutoffs n_a, n_b must be >= 2");
}

DensityMatrix DensityMatrix::checked(ComplexMatrix m, ModeDims dims) {
    if (m.rows() != m.cols())
        throw Error(ErrorCode::InvalidState, "density matrix must be square");
    int prod = 1;
    for (int d : dims) prod *= d;
    if (dims.empty() || prod != m.rows())
        throw Error(ErrorCode::DimensionMismatch, "mode dims do not factor the matrix dimension");
    if (hermiticity_error(m) > 1e-9)
        throw Error(ErrorCode::InvalidState, "density matrix is not Hermitian");
    const double tr = m.trace().real();
    if (std::abs(tr - 1.0) > 1e-9)
        throw Error(ErrorCode::InvalidState, "trace " + std::to_string(tr) + " != 1");
    const double min_eig = eigh(m).eigenvalues[0];
    if (min_eig < -1e-9)
        throw Error(ErrorCode::InvalidState,
                    "negative eigenvalue " + std::to_string(min_eig));
    return DensityMatrix{std::move(m), std::move(dims)};
}

ComplexMatrix annihilation(int dim) {
    if (dim < 2) throw Error(ErrorCode::InvalidDimension, "ladder operators need dim >= 2");
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k + 1 < dim; ++k) a(k, k + 1) = std::sqrt(static_cast<double>(k + 1));
    return a;
}

ComplexMatrix number_operator(int dim) {
    if (dim < 2) throw Error(ErrorCode::InvalidDimension, "ladder operators need dim >= 2");
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

Quadratures quadratures(int dim) {
    const ComplexMatrix a = annihilation(dim);
    const ComplexMatrix ad = a.adjoint();
    const double s = 1.0 / std::sqrt(2.0);
    return {(a + ad) * s, (a - ad) * Complex(0.0, -s)};
}

ComplexMatrix build_hamiltonian(const ModelConfig& cfg) {
    cfg.validate(/*allow_negative_field=*/true);
    const ComplexMatrix a = annihilation(cfg.n_a);
    const ComplexMatrix b = annihilation(cfg.n_b);
    const ComplexMatrix id_a = ComplexMatrix::Identity(cfg.n_a, cfg.n_a);
    const ComplexMatrix id_b = ComplexMatrix::Identity(cfg.n_b, cfg.n_b);
    const ComplexMatrix x_b = b + b.adjoint();
    const ComplexMatrix n_a = number_operator(cfg.n_a);

    ComplexMatrix h = cfg.omega_a * kron(n_a, id_b) +
                      kron(id_a, cfg.omega_b * number_operator(cfg.n_b) + cfg.b_ext * x_b);

    if (cfg.g != 0.0) {
        ComplexMatrix coupling_a;
        if (cfg.interaction == Interaction::Quadratic) {
            const ComplexMatrix x_a = a + a.adjoint();
            coupling_a = x_a * x_a;
        } else {
            coupling_a = n_a;
        }
        h += cfg.g * kron(coupling_a, x_b);
    }
    return h;
}

namespace {

RealVector boltzmann_weights(const RealVector& e, double temperature) {
    if (!(temperature > 0.0))
        throw Error(ErrorCode::NonPositiveTemperature, "temperature must be > 0");
    const double e0 = e[0];
    RealVector w(e.size());
    for (Eigen::Index k = 0; k < e.size(); ++k) w[k] = std::exp(-(e[k] - e0) / temperature);
    return w / w.sum();
}

} // namespace

DensityMatrix gibbs_state(const SpectralDecomposition& spectrum, double temperature,
                          ModeDims dims) {
    const RealVector w = boltzmann_weights(spectrum.eigenvalues, temperature);

    const ComplexMatrix& v = spectrum.eigenvectors;
    ComplexMatrix rho = hermitian_part(v * w.asDiagonal() * v.adjoint());
    if (dims.empty()) dims = {static_cast<int>(rho.rows())};
    return DensityMatrix{std::move(rho), std::move(dims)};
}

DensityMatrix gibbs_state(const ComplexMatrix& h, double temperature, ModeDims dims) {
    if (!(temperature > 0.0))
        throw Error(ErrorCode::NonPositiveTemperature, "temperature must be > 0");
    return gibbs_state(eigh(h), temperature, std::move(dims));
}

DensityMatrix probe_state(const DensityMatrix& rho_joint, const ModelConfig& cfg) {
    if (rho_joint.dims.size() != 2 || rho_joint.dims[0] != cfg.n_a || rho_joint.dims[1] != cfg.n_b)
        throw Error(ErrorCode::DimensionMismatch,
                    "joint state factorization does not match cutoffs (n_a, n_b)");
    ComplexMatrix reduced = hermitian_part(partial_trace(rho_joint.matrix, cfg.n_a, cfg.n_b, Subsystem::A));
    return DensityMatrix{std::move(reduced), {cfg.n_a}};
}

DensityMatrix reduced_gibbs_state(const SpectralDecomposition& spectrum, double temperature,
                                  const ModelConfig& cfg) {
    if (spectrum.eigenvectors.rows() != cfg.joint_dim())
        throw Error(ErrorCode::DimensionMismatch, "spectrum dimension does not match n_a * n_b");
    const RealVector w = boltzmann_weights(spectrum.eigenvalues, temperature);
    ComplexMatrix reduced = ComplexMatrix::Zero(cfg.n_a, cfg.n_a);
    for (Eigen::Index k = 0; k < w.size(); ++k) {
        if (w[k] == 0.0) continue;
        // m(j, i) = <i, j | v_k>
        const Eigen::Map<const ComplexMatrix> m(spectrum.eigenvectors.col(k).data(), cfg.n_b, cfg.n_a);
        reduced.noalias() += w[k] * (m.transpose() * m.conjugate());
    }
    return DensityMatrix{hermitian_part(reduced), {cfg.n_a}};
}

DensityMatrix probe_for(const ModelConfig& cfg) {
    return reduced_gibbs_state(eigh(build_hamiltonian(cfg)), cfg.temperature, cfg);
}

} // namespace qthermo
