#include "qthermo/tensor_core.hpp"

#include "qthermo/errors.hpp"

#include <lapacke.h>

#include <cmath>
#include <algorithm>
#include <limits>
#include <numeric>
#include <vector>
#include <string>

namespace qthermo {

namespace {

bool is_diagonal(const ComplexMatrix& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j && m(i, j) != Complex(0.0, 0.0)) return false;
    return true;
}

void check_info(lapack_int info, const char* driver) {
    if (info > 0)
        throw Error(ErrorCode::NoConvergence,
                    std::string(driver) + " failed to converge (info=" + std::to_string(info) + ")");
    if (info < 0)
        throw Error(ErrorCode::DomainError,
                    std::string(driver) + " rejected argument " + std::to_string(-info));
}

} // namespace

double hermiticity_error(const ComplexMatrix& m) {
    if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i <= j; ++i)
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
    return worst;
}

double max_abs(const ComplexMatrix& m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) {
    return (m + m.adjoint()) * 0.5;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

SpectralDecomposition eigh(const ComplexMatrix& m, double tol) {
    const double herr = hermiticity_error(m);
    if (!(herr <= tol))
        throw Error(ErrorCode::NotHermitian,
                    "matrix deviates from its adjoint by " + std::to_string(herr));

    const auto n = static_cast<lapack_int>(m.rows());
    SpectralDecomposition out;
    out.eigenvalues.resize(n);
    if (n == 0) {
        out.eigenvectors.resize(0, 0);
        return out;
    }

    if (is_diagonal(m)) {
        std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::stable_sort(order.begin(), order.end(),
                         [&](Eigen::Index a, Eigen::Index b) { return m(a, a).real() < m(b, b).real(); });
        out.eigenvectors = ComplexMatrix::Zero(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            out.eigenvalues[k] = m(order[k], order[k]).real();
            out.eigenvectors(order[k], k) = 1.0;
        }
        return out;
    }

    // zheevd for all input: the real dsyevd/dsyev drivers shipped in this
    // environment return non-orthogonal eigenvectors for n >= ~80.
    ComplexMatrix work = hermitian_part(m);
    check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, 'V', 'U', n,
                              reinterpret_cast<lapack_complex_double*>(work.data()), n,
                              out.eigenvalues.data()),
               "zheevd");
    out.eigenvectors = std::move(work);
    return out;
}

ComplexMatrix SpectralDecomposition::apply(const std::function<double(double)>& f) const {
    const Eigen::Index n = eigenvalues.size();
    RealVector fv(n);
    for (Eigen::Index k = 0; k < n; ++k) {
        fv[k] = f(eigenvalues[k]);
        if (!std::isfinite(fv[k]))
            throw Error(ErrorCode::DomainError,
                        "function undefined at eigenvalue " + std::to_string(eigenvalues[k]));
    }
    ComplexMatrix out = eigenvectors * fv.asDiagonal() * eigenvectors.adjoint();
    return hermitian_part(out);
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return apply([](double x) { return x; });
}

ComplexMatrix herm_func(const ComplexMatrix& m, const std::function<double(double)>& f) {
    return eigh(m).apply(f);
}

ComplexMatrix partial_trace(const ComplexMatrix& rho, int dim_a, int dim_b, Subsystem keep) {
    if (dim_a <= 0 || dim_b <= 0 || rho.rows() != rho.cols() ||
        rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b)
        throw Error(ErrorCode::DimensionMismatch,
                    "partial_trace: matrix is " + std::to_string(rho.rows()) + "x" +
                        std::to_string(rho.cols()) + ", expected " + std::to_string(dim_a) +
                        "*" + std::to_string(dim_b));

    if (keep == Subsystem::A) {
        ComplexMatrix out = ComplexMatrix::Zero(dim_a, dim_a);
        for (int i = 0; i < dim_a; ++i)
            for (int j = 0; j < dim_a; ++j)
                out(i, j) = rho.block(i * dim_b, j * dim_b, dim_b, dim_b).trace();
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(dim_b, dim_b);
    for (int k = 0; k < dim_a; ++k)
        out += rho.block(k * dim_b, k * dim_b, dim_b, dim_b);
    return out;
}

} // namespace qthermo
