// Wigner quasiprobability of a single-mode state on a
// rectangular (x, p) grid, with negativity and normalization statistics.
//
// Quadrature convention X = (a + a†)/√2, P = (a − a†)/(i√2), so the vacuum is
// W(x, p) = exp(−x² − p²)/π.

#pragma once

#include "qthermo/bosonic_model.hpp"

#include <vector>

namespace qthermo {

inline constexpr double kWignerNormTolerance = 1e-2;

struct WignerGrid {
    std::vector<double> xs;
    std::vector<double> ps;
    Eigen::MatrixXd values; // values(i, j) = W(xs[i], ps[j])
    double cell_area = 0.0;
    double min_value = 0.0;
    double negative_volume = 0.0; // ∫ max(−W, 0) dx dp (Riemann sum)
    double total_integral = 0.0;  // ∫ W dx dp (Riemann sum)

    // Grid-adequacy diagnostic: |total_integral − 1| <= tol.
    bool normalized(double tol = kWignerNormTolerance) const;
};

// n evenly spaced points on [lo, hi].
std::vector<double> uniform_axis(double lo, double hi, int n);

// Throws Error{MultiModeState} for a multi-mode rho and Error{NonUniformGrid}
// for axes that are not strictly increasing with uniform spacing.
WignerGrid wigner_grid(const DensityMatrix& rho, const std::vector<double>& xs,
                       const std::vector<double>& ps);

// W at a single phase-space point.
double wigner_value(const DensityMatrix& rho, double x, double p);

struct WignerNegativity {
    double min_value = 0.0;
    double negative_volume = 0.0;
};

WignerNegativity wigner_negativity(const WignerGrid& grid);

} // namespace qthermo
