// Quadrature moments, squeezing, von Neumann entropy,
// relative-entropy non-Gaussianity and kurtosis of a single-mode state.
// Entropies are in nats.

#pragma once

#include "qthermo/bosonic_model.hpp"

namespace qthermo {

inline constexpr int kMinMomentCutoff = 6;
inline constexpr double kEntropyEigenFloor = 1e-14;
inline constexpr double kDefaultSqueezeMargin = 1e-6;

struct GaussianSummary {
    double mean_x = 0.0;
    double mean_p = 0.0;
    double var_x = 0.0;
    double var_p = 0.0;
    double cov_xp = 0.0; // ½⟨{ΔX, ΔP}⟩
    double fourth_x = 0.0; // ⟨(ΔX)⁴⟩
    double fourth_p = 0.0;
    double kurtosis_x = 0.0;
    double kurtosis_p = 0.0;
    double min_rotated_variance = 0.0;
    double symplectic_nu = 0.0; // √(var_x var_p − cov_xp²)

    // Filled by non_gaussianity().
    double entropy_gaussian = 0.0;
    double entropy_state = 0.0;
    double delta = 0.0;
};

// Smaller eigenvalue of [[var_x, cov], [cov, var_p]].
double min_rotated_variance(double var_x, double var_p, double cov_xp);

// S of a Gaussian single-mode state with symplectic eigenvalue ν (0 at ν = ½).
double gaussian_entropy(double nu);

// Throws Error{CutoffTooSmall} below kMinMomentCutoff levels and
// Error{MultiModeState} for joint states.
GaussianSummary quadrature_moments(const DensityMatrix& rho);

struct SqueezingResult {
    double min_rotated_variance = 0.0;
    bool squeezed = false; // min variance < ½ − margin
};

SqueezingResult squeezing_analysis(const GaussianSummary& summary,
                                   double margin = kDefaultSqueezeMargin);

// −Σ q ln q over eigenvalues q > 1e-14. Eigenvalues in [−1e-9, 0) are treated
// as zero; anything more negative is Error{InvalidState}.
double von_neumann_entropy(const DensityMatrix& rho);

GaussianSummary non_gaussianity(const DensityMatrix& rho);

} // namespace qthermo
