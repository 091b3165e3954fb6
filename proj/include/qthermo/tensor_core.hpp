// Dense complex matrices: Hermitian eigendecomposition,
// spectral operator functions, Kronecker products and bipartite partial trace.
//
// Tensor ordering convention used throughout qthermo: for a composite space
// A ⊗ B the FIRST Kronecker factor is subsystem A, so the joint basis index is
// i_a * dim_b + i_b.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <functional>

namespace qthermo {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Entrywise tolerance accepted by eigh() and herm_func() on their inputs.
inline constexpr double kHermitianTolerance = 1e-9;

struct SpectralDecomposition {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // column k pairs with eigenvalues[k]

    // V diag(f(λ)) V†, re-symmetrized to (M + M†)/2.
    ComplexMatrix apply(const std::function<double(double)>& f) const;
    ComplexMatrix reconstruct() const;
};

// max |M - M†| over all entries. Non-square input yields +inf.
double hermiticity_error(const ComplexMatrix& m);

// max |M_ij| (0 for an empty matrix).
double max_abs(const ComplexMatrix& m);

ComplexMatrix hermitian_part(const ComplexMatrix& m);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Throws Error{NotHermitian} when hermiticity_error(m) > tol and
// Error{NoConvergence} when the LAPACK driver reports a failed reduction.
SpectralDecomposition eigh(const ComplexMatrix& m, double tol = kHermitianTolerance);

// Applies a real scalar function through the spectrum. A non-finite f(λ) is
// reported as Error{DomainError}.
ComplexMatrix herm_func(const ComplexMatrix& m, const std::function<double(double)>& f);

enum class Subsystem { A, B };

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, Subsystem keep);

} // namespace qthermo
