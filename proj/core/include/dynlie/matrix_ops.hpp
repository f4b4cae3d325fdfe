// matrix_ops.hpp — dense complex linear-algebra kernels shared by all modules:
// commutators, trace-zero projection, Frobenius geometry, null spaces,
// eigenvalues, and Hermitian matrix exponentials.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace dynlie {

using Cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Eigenvalues counted with multiplicity, sorted by descending real part,
// ties broken by descending imaginary part.
struct Spectrum {
    std::vector<Cplx> values;
};

// Sorts into the canonical Spectrum order.
Spectrum make_spectrum(std::vector<Cplx> values);

// AB - BA. Throws std::invalid_argument on dimension mismatch.
Matrix commutator(const Matrix& a, const Matrix& b);

// H - (Tr H / N) I. Idempotent projection onto trace-zero matrices.
Matrix traceless_part(const Matrix& h);

// Re Tr(A^dag B): the real inner product under which algebra bases are kept
// orthonormal. Throws on dimension mismatch.
double frobenius_inner(const Matrix& a, const Matrix& b);

double frobenius_norm(const Matrix& a);

bool is_hermitian(const Matrix& a, double tol);
bool is_skew_hermitian(const Matrix& a, double tol);

struct Residual {
    Matrix residual;
    double norm = 0.0;
};

// Component of x orthogonal to span(basis). The basis must be pairwise
// orthonormal under frobenius_inner; debug builds verify this and throw
// std::logic_error on violation.
Residual orthonormal_residual(const Matrix& x, const std::vector<Matrix>& basis);

// Orthonormal basis of {v : Mv = 0} for a rectangular M, via SVD with the
// relative threshold sigma <= 1e-10 * sigma_max. Empty if the null space is
// trivial.
std::vector<Vector> nullspace(const Matrix& m);

// All eigenvalues of a square complex matrix, Spectrum-sorted. Throws
// std::runtime_error if the solver fails to converge.
Spectrum eigenvalues(const Matrix& a);

// exp(-i t H) for Hermitian H, via spectral decomposition. Throws
// std::invalid_argument if H is not Hermitian within 1e-10 (relative).
Matrix hermitian_expm(const Matrix& h, double t);

}  // namespace dynlie
