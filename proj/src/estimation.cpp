#include "qthermo/estimation.hpp"

#include "qthermo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace qthermo {

std::string_view to_string(ParamId p) noexcept {
    return p == ParamId::Temperature ? "temperature" : "b_ext";
}

std::string_view to_string(ObservableId o) noexcept {
    switch (o) {
        case ObservableId::PhotonNumber: return "photon_number";
        case ObservableId::QuadratureX: return "x";
        case ObservableId::QuadratureXSquared: return "x2";
        case ObservableId::Parity: return "parity";
    }
    return "unknown";
}

ParamId parse_param(std::string_view name) {
    if (name == "temperature" || name == "T") return ParamId::Temperature;
    if (name == "b_ext" || name == "B") return ParamId::MagneticField;
    throw Error(ErrorCode::InvalidConfig, "unknown parameter '" + std::string(name) + "'");
}

ObservableId parse_observable(std::string_view name) {
    if (name == "photon_number" || name == "n") return ObservableId::PhotonNumber;
    if (name == "x") return ObservableId::QuadratureX;
    if (name == "x2") return ObservableId::QuadratureXSquared;
    if (name == "parity") return ObservableId::Parity;
    throw Error(ErrorCode::InvalidConfig, "unknown observable '" + std::string(name) + "'");
}

double parameter_value(const ModelConfig& cfg, ParamId param) {
    return param == ParamId::Temperature ? cfg.temperature : cfg.b_ext;
}

ModelConfig with_parameter(ModelConfig cfg, ParamId param, double value) {
    (param == ParamId::Temperature ? cfg.temperature : cfg.b_ext) = value;
    return cfg;
}

double default_step(const ModelConfig& cfg, ParamId param) {
    return 1e-4 * std::max(std::abs(parameter_value(cfg, param)), 0.01);
}

namespace {

struct Stencil {
    DensityMatrix minus;
    DensityMatrix plus;
};

void check_step(const ModelConfig& cfg, ParamId param, double step) {
    if (!(step > 0.0) || !std::isfinite(step))
        throw Error(ErrorCode::InvalidStep, "derivative step must be > 0");
    if (param == ParamId::Temperature && !(cfg.temperature - step > 0.0))
        throw Error(ErrorCode::InvalidStep, "temperature - step must stay > 0");
}

// Temperature moves leave H unchanged, so one spectrum serves the whole stencil.
Stencil probe_stencil(const ModelConfig& cfg, ParamId param, double step) {
    cfg.validate();
    check_step(cfg, param, step);
    if (param == ParamId::Temperature) {
        const SpectralDecomposition spectrum = eigh(build_hamiltonian(cfg));
        return {reduced_gibbs_state(spectrum, cfg.temperature - step, cfg),
                reduced_gibbs_state(spectrum, cfg.temperature + step, cfg)};
    }
    return {probe_for(with_parameter(cfg, param, cfg.b_ext - step)),
            probe_for(with_parameter(cfg, param, cfg.b_ext + step))};
}

ComplexMatrix difference(const Stencil& s, double step) {
    return hermitian_part((s.plus.matrix - s.minus.matrix) / (2.0 * step));
}

struct Eigenbasis {
    RealVector q;
    ComplexMatrix v;
};

Eigenbasis eigenbasis(const DensityMatrix& rho) {
    SpectralDecomposition s = eigh(rho.matrix);
    return {std::move(s.eigenvalues), std::move(s.eigenvectors)};
}

void check_same_dim(const DensityMatrix& rho, const ComplexMatrix& op, const char* what) {
    if (op.rows() != rho.matrix.rows() || op.cols() != rho.matrix.cols())
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " does not match rho's dimension");
}

// Σ_{q_m+q_n > floor} 2 Re[A_mn B_nm] / (q_m + q_n) with A, B in the eigenbasis.
double spectral_form(const RealVector& q, const ComplexMatrix& a, const ComplexMatrix& b,
                     double floor) {
    double sum = 0.0;
    const Eigen::Index n = q.size();
    for (Eigen::Index m = 0; m < n; ++m)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double s = q[m] + q[k];
            if (s > floor) sum += 2.0 * (a(m, k) * b(k, m)).real() / s;
        }
    return sum;
}

ComplexMatrix sld_in_eigenbasis(const RealVector& q, const ComplexMatrix& d, double floor) {
    const Eigen::Index n = q.size();
    ComplexMatrix l = ComplexMatrix::Zero(n, n);
    for (Eigen::Index m = 0; m < n; ++m)
        for (Eigen::Index k = 0; k < n; ++k) {
            const double s = q[m] + q[k];
            if (s > floor) l(m, k) = 2.0 * d(m, k) / s;
        }
    return l;
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
    return (rho.matrix * op).trace().real();
}

} // namespace

ComplexMatrix probe_derivative(const ModelConfig& cfg, ParamId param, double step) {
    return difference(probe_stencil(cfg, param, step), step);
}

ComplexMatrix probe_derivative(const ModelConfig& cfg, ParamId param) {
    return probe_derivative(cfg, param, default_step(cfg, param));
}

double derivative_richardson_ratio(const ModelConfig& cfg, ParamId param, double step) {
    const ComplexMatrix d1 = probe_derivative(cfg, param, step);
    const ComplexMatrix d2 = probe_derivative(cfg, param, step / 2);
    const ComplexMatrix d4 = probe_derivative(cfg, param, step / 4);
    return max_abs(d1 - d2) / max_abs(d2 - d4);
}

double qfi(const DensityMatrix& rho, const ComplexMatrix& drho, double floor) {
    check_same_dim(rho, drho, "drho");
    const Eigenbasis e = eigenbasis(rho);
    const ComplexMatrix d = e.v.adjoint() * drho * e.v;
    return std::max(0.0, spectral_form(e.q, d, d, floor));
}

ComplexMatrix sld(const DensityMatrix& rho, const ComplexMatrix& drho, double floor) {
    check_same_dim(rho, drho, "drho");
    const Eigenbasis e = eigenbasis(rho);
    const ComplexMatrix d = e.v.adjoint() * drho * e.v;
    return hermitian_part(e.v * sld_in_eigenbasis(e.q, d, floor) * e.v.adjoint());
}

double lyapunov_residual(const DensityMatrix& rho, const ComplexMatrix& drho, const ComplexMatrix& l,
                         double floor) {
    check_same_dim(rho, drho, "drho");
    check_same_dim(rho, l, "SLD");
    const Eigenbasis e = eigenbasis(rho);
    const ComplexMatrix r =
        e.v.adjoint() * (drho - 0.5 * (l * rho.matrix + rho.matrix * l)) * e.v;
    double worst = 0.0;
    for (Eigen::Index m = 0; m < r.rows(); ++m)
        for (Eigen::Index k = 0; k < r.cols(); ++k)
            if (e.q[m] + e.q[k] > floor) worst = std::max(worst, std::abs(r(m, k)));
    return worst;
}

SldCompatibility sld_compatibility(const DensityMatrix& rho, const ComplexMatrix& l_t,
                                   const ComplexMatrix& l_b) {
    check_same_dim(rho, l_t, "L_T");
    check_same_dim(rho, l_b, "L_B");
    const Complex t = (rho.matrix * (l_t * l_b - l_b * l_t)).trace();
    // t / (2i) = (Im t)/2 − i (Re t)/2; the real part of that is the statistic.
    return {t.imag() / 2.0, t.real()};
}

double QfimResult::min_eigenvalue() const {
    const double mean = 0.5 * (f_tt + f_bb);
    const double half_gap = std::hypot(0.5 * (f_tt - f_bb), f_tb);
    return mean - half_gap;
}

QfimResult qfim(const DensityMatrix& rho, const ComplexMatrix& drho_t, const ComplexMatrix& drho_b,
                double floor) {
    check_same_dim(rho, drho_t, "drho_t");
    check_same_dim(rho, drho_b, "drho_b");
    const Eigenbasis e = eigenbasis(rho);
    const ComplexMatrix dt = e.v.adjoint() * drho_t * e.v;
    const ComplexMatrix db = e.v.adjoint() * drho_b * e.v;

    QfimResult r;
    r.f_tt = std::max(0.0, spectral_form(e.q, dt, dt, floor));
    r.f_bb = std::max(0.0, spectral_form(e.q, db, db, floor));
    r.f_tb = spectral_form(e.q, dt, db, floor);
    r.det = r.f_tt * r.f_bb - r.f_tb * r.f_tb;

    const ComplexMatrix l_t = hermitian_part(e.v * sld_in_eigenbasis(e.q, dt, floor) * e.v.adjoint());
    const ComplexMatrix l_b = hermitian_part(e.v * sld_in_eigenbasis(e.q, db, floor) * e.v.adjoint());
    const SldCompatibility c = sld_compatibility(rho, l_t, l_b);
    r.c_tb = c.c_tb;
    r.r_tb = c.r_tb;
    return r;
}

ComplexMatrix observable_operator(ObservableId obs, int dim) {
    switch (obs) {
        case ObservableId::PhotonNumber: return number_operator(dim);
        case ObservableId::QuadratureX: return quadratures(dim).x;
        case ObservableId::QuadratureXSquared: {
            const ComplexMatrix x = quadratures(dim).x;
            return x * x;
        }
        case ObservableId::Parity: {
            if (dim < 2) throw Error(ErrorCode::InvalidDimension, "parity needs dim >= 2");
            ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
            for (int k = 0; k < dim; ++k) p(k, k) = (k % 2 == 0) ? 1.0 : -1.0;
            return p;
        }
    }
    throw Error(ErrorCode::InvalidConfig, "unknown observable");
}

double cfi_error_propagation(const ModelConfig& cfg, ObservableId obs, ParamId param, double step,
                             double var_floor) {
    const Stencil s = probe_stencil(cfg, param, step);
    const DensityMatrix center = probe_for(cfg);
    const ComplexMatrix o = observable_operator(obs, cfg.n_a);

    const double mean = expectation(center, o);
    const double var = expectation(center, o * o) - mean * mean;
    if (!(var > var_floor))
        throw Error(ErrorCode::DegenerateVariance,
                    "Var(" + std::string(to_string(obs)) + ") = " + std::to_string(var));
    const double slope = (expectation(s.plus, o) - expectation(s.minus, o)) / (2.0 * step);
    return slope * slope / var;
}

double cfi_error_propagation(const ModelConfig& cfg, ObservableId obs, ParamId param) {
    return cfi_error_propagation(cfg, obs, param, default_step(cfg, param));
}

namespace {

// Each outcome is the span of a set of orthonormal vectors (columns).
std::vector<ComplexMatrix> outcome_bases(ObservableId obs, int dim) {
    std::vector<ComplexMatrix> out;
    switch (obs) {
        case ObservableId::PhotonNumber:
            for (int k = 0; k < dim; ++k) out.push_back(ComplexMatrix::Identity(dim, dim).col(k));
            return out;
        case ObservableId::Parity: {
            for (int parity = 0; parity < 2; ++parity) {
                const int count = (dim - parity + 1) / 2;
                ComplexMatrix basis = ComplexMatrix::Zero(dim, count);
                for (int j = 0; j < count; ++j) basis(2 * j + parity, j) = 1.0;
                out.push_back(std::move(basis));
            }
            return out;
        }
        case ObservableId::QuadratureX:
        case ObservableId::QuadratureXSquared: {
            const SpectralDecomposition s = eigh(quadratures(dim).x);
            if (obs == ObservableId::QuadratureX) {
                for (int k = 0; k < dim; ++k) out.push_back(s.eigenvectors.col(k));
                return out;
            }
            // Spectrum of truncated X is symmetric: pair x_k with −x_k.
            std::vector<bool> used(dim, false);
            for (int k = 0; k < dim; ++k) {
                if (used[k]) continue;
                std::vector<int> members{k};
                used[k] = true;
                const double sq = s.eigenvalues[k] * s.eigenvalues[k];
                for (int j = k + 1; j < dim; ++j)
                    if (!used[j] && std::abs(s.eigenvalues[j] * s.eigenvalues[j] - sq) <= 1e-9) {
                        members.push_back(j);
                        used[j] = true;
                    }
                ComplexMatrix basis(dim, static_cast<Eigen::Index>(members.size()));
                for (std::size_t c = 0; c < members.size(); ++c)
                    basis.col(static_cast<Eigen::Index>(c)) = s.eigenvectors.col(members[c]);
                out.push_back(std::move(basis));
            }
            return out;
        }
    }
    return out;
}

} // namespace

double cfi_projective(const DensityMatrix& rho, const ComplexMatrix& drho, ObservableId obs,
                      double prob_floor) {
    check_same_dim(rho, drho, "drho");
    double sum = 0.0;
    for (const ComplexMatrix& basis : outcome_bases(obs, rho.dim())) {
        const double p = (basis.adjoint() * rho.matrix * basis).trace().real();
        if (!(p > prob_floor)) continue;
        const double dp = (basis.adjoint() * drho * basis).trace().real();
        sum += dp * dp / p;
    }
    return sum;
}

double qfi_at(const ModelConfig& cfg, ParamId param) {
    return qfi(probe_for(cfg), probe_derivative(cfg, param));
}

QfimResult qfim_at(const ModelConfig& cfg) {
    return qfim(probe_for(cfg), probe_derivative(cfg, ParamId::Temperature),
                probe_derivative(cfg, ParamId::MagneticField));
}

} // namespace qthermo
