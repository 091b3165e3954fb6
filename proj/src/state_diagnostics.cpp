#include "qthermo/state_diagnostics.hpp"

#include "qthermo/errors.hpp"

#include <cmath>
#include <string>

namespace qthermo {

double min_rotated_variance(double var_x, double var_p, double cov_xp) {
    const double mean = 0.5 * (var_x + var_p);
    return mean - std::hypot(0.5 * (var_x - var_p), cov_xp);
}

double gaussian_entropy(double nu) {
    const double excess = nu - 0.5;
    if (excess <= 0.0) return 0.0;
    return (nu + 0.5) * std::log(nu + 0.5) - excess * std::log(excess);
}

GaussianSummary quadrature_moments(const DensityMatrix& rho) {
    if (!rho.single_mode())
        throw Error(ErrorCode::MultiModeState, "quadrature moments need a single-mode state");
    if (rho.dim() < kMinMomentCutoff)
        throw Error(ErrorCode::CutoffTooSmall,
                    "fourth moments need a cutoff >= " + std::to_string(kMinMomentCutoff));

    const int n = rho.dim();
    const Quadratures q = quadratures(n);
    const ComplexMatrix id = ComplexMatrix::Identity(n, n);
    auto mean = [&](const ComplexMatrix& op) { return (rho.matrix * op).trace().real(); };

    GaussianSummary s;
    s.mean_x = mean(q.x);
    s.mean_p = mean(q.p);
    const ComplexMatrix dx = q.x - s.mean_x * id;
    const ComplexMatrix dp = q.p - s.mean_p * id;
    const ComplexMatrix dx2 = dx * dx;
    const ComplexMatrix dp2 = dp * dp;
    s.var_x = mean(dx2);
    s.var_p = mean(dp2);
    s.cov_xp = 0.5 * mean(dx * dp + dp * dx);
    s.fourth_x = mean(dx2 * dx2);
    s.fourth_p = mean(dp2 * dp2);
    s.kurtosis_x = s.fourth_x / (s.var_x * s.var_x);
    s.kurtosis_p = s.fourth_p / (s.var_p * s.var_p);
    s.min_rotated_variance = min_rotated_variance(s.var_x, s.var_p, s.cov_xp);
    s.symplectic_nu = std::sqrt(std::max(0.0, s.var_x * s.var_p - s.cov_xp * s.cov_xp));
    return s;
}

SqueezingResult squeezing_analysis(const GaussianSummary& summary, double margin) {
    const double v = min_rotated_variance(summary.var_x, summary.var_p, summary.cov_xp);
    return {v, v < 0.5 - margin};
}

double von_neumann_entropy(const DensityMatrix& rho) {
    const RealVector q = eigh(rho.matrix).eigenvalues;
    double s = 0.0;
    for (Eigen::Index k = 0; k < q.size(); ++k) {
        if (q[k] < -1e-9)
            throw Error(ErrorCode::InvalidState, "eigenvalue " + std::to_string(q[k]) + " < 0");
        if (q[k] > kEntropyEigenFloor) s -= q[k] * std::log(q[k]);
    }
    return std::max(0.0, s);
}

GaussianSummary non_gaussianity(const DensityMatrix& rho) {
    GaussianSummary s = quadrature_moments(rho);
    s.entropy_gaussian = gaussian_entropy(s.symplectic_nu);
    s.entropy_state = von_neumann_entropy(rho);
    s.delta = s.entropy_gaussian - s.entropy_state;
    return s;
}

} // namespace qthermo
