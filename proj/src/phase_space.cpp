#include "qthermo/phase_space.hpp"

#include "qthermo/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qthermo {

namespace {

void check_axis(const std::vector<double>& axis, const char* name) {
    if (axis.size() < 2)
        throw Error(ErrorCode::NonUniformGrid, std::string(name) + " axis needs at least 2 points");
    const double step = axis[1] - axis[0];
    if (!(step > 0.0))
        throw Error(ErrorCode::NonUniformGrid, std::string(name) + " axis must be strictly increasing");
    const double tol = 1e-9 * std::max(1.0, std::abs(axis.back() - axis.front()));
    for (std::size_t i = 1; i < axis.size(); ++i)
        if (std::abs((axis[i] - axis[i - 1]) - step) > tol)
            throw Error(ErrorCode::NonUniformGrid, std::string(name) + " axis spacing is not uniform");
}

// Wigner kernel of the Fock dyads |m⟩⟨n|, m >= n, at a point with
// z = √2 (x − i p):
//   W_mn = (−1)^n / π · √(n!/m!) · z^(m−n) · e^(−r²) · L_n^(m−n)(2 r²),  r² = x² + p².
// W of |n⟩⟨m| is the complex conjugate. Laguerre polynomials are advanced by
// their three-term recurrence in n for each fixed order k = m − n.
class WignerKernel {
public:
    explicit WignerKernel(int dim) : dim_(dim), log_fact_(dim + 1, 0.0), laguerre_(dim) {
        for (int k = 1; k <= dim; ++k) log_fact_[k] = log_fact_[k - 1] + std::log(static_cast<double>(k));
    }

    Complex evaluate(const ComplexMatrix& rho, double x, double p) {
        const double r2 = x * x + p * p;
        const double u = 2.0 * r2;
        const double phase = std::atan2(-p, x); // arg z
        const double log_abs_z = r2 > 0.0 ? 0.5 * std::log(2.0 * r2) : -INFINITY;
        Complex total = 0.0;

        for (int k = 0; k < dim_; ++k) {
            const int count = dim_ - k; // n = 0..count-1, m = n + k
            laguerre_[0] = 1.0;
            if (count > 1) laguerre_[1] = 1.0 + k - u;
            for (int n = 1; n + 1 < count; ++n)
                laguerre_[n + 1] = ((2.0 * n + 1.0 + k - u) * laguerre_[n] - (n + k) * laguerre_[n - 1]) / (n + 1.0);

            const Complex zk = (k == 0) ? Complex(1.0, 0.0)
                                        : std::polar(1.0, k * phase);
            Complex order_sum = 0.0;
            for (int n = 0; n < count; ++n) {
                const int m = n + k;
                double log_mag = 0.5 * (log_fact_[n] - log_fact_[m]) - r2;
                if (k > 0) {
                    if (r2 == 0.0) continue;
                    log_mag += k * log_abs_z;
                }
                const double sign = (n % 2 == 0) ? 1.0 : -1.0;
                const double mag = sign * std::exp(log_mag) * laguerre_[n];
                // ρ_mn contributes W of |m⟩⟨n|; ρ_nm contributes its conjugate.
                const Complex kernel = mag * zk;
                if (k == 0) {
                    order_sum += rho(m, n) * kernel;
                } else {
                    order_sum += rho(m, n) * kernel + rho(n, m) * std::conj(kernel);
                }
            }
            total += order_sum;
        }
        return total / std::numbers::pi;
    }

private:
    int dim_;
    std::vector<double> log_fact_;
    std::vector<double> laguerre_;
};

void check_single_mode(const DensityMatrix& rho) {
    if (!rho.single_mode())
        throw Error(ErrorCode::MultiModeState, "Wigner function requires a single-mode state");
}

double real_part_checked(Complex w) {
    if (std::abs(w.imag()) > 1e-9)
        throw Error(ErrorCode::InvalidState,
                    "Wigner kernel sum has imaginary residue " + std::to_string(w.imag()));
    return w.real();
}

} // namespace

bool WignerGrid::normalized(double tol) const {
    return std::abs(total_integral - 1.0) <= tol;
}

std::vector<double> uniform_axis(double lo, double hi, int n) {
    if (n < 2 || !(hi > lo))
        throw Error(ErrorCode::NonUniformGrid, "axis needs n >= 2 and hi > lo");
    std::vector<double> axis(static_cast<std::size_t>(n));
    const double step = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) axis[static_cast<std::size_t>(i)] = lo + step * i;
    axis.back() = hi;
    return axis;
}

double wigner_value(const DensityMatrix& rho, double x, double p) {
    check_single_mode(rho);
    WignerKernel kernel(rho.dim());
    return real_part_checked(kernel.evaluate(rho.matrix, x, p));
}

WignerGrid wigner_grid(const DensityMatrix& rho, const std::vector<double>& xs,
                       const std::vector<double>& ps) {
    check_single_mode(rho);
    check_axis(xs, "x");
    check_axis(ps, "p");

    WignerGrid grid;
    grid.xs = xs;
    grid.ps = ps;
    grid.values.resize(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ps.size()));
    grid.cell_area = (xs[1] - xs[0]) * (ps[1] - ps[0]);

    WignerKernel kernel(rho.dim());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j)
            grid.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                real_part_checked(kernel.evaluate(rho.matrix, xs[i], ps[j]));

    const WignerNegativity neg = wigner_negativity(grid);
    grid.min_value = neg.min_value;
    grid.negative_volume = neg.negative_volume;
    grid.total_integral = grid.values.sum() * grid.cell_area;
    return grid;
}

WignerNegativity wigner_negativity(const WignerGrid& grid) {
    WignerNegativity out;
    if (grid.values.size() == 0) return out;
    out.min_value = grid.values.minCoeff();
    out.negative_volume = (-grid.values.array()).max(0.0).sum() * grid.cell_area;
    return out;
}

} // namespace qthermo
