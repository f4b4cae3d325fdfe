#include "dynlie/matrix_ops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace dynlie {

namespace {

void require_square(const Matrix& a, const char* where) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        std::ostringstream msg;
        msg << where << ": matrix must be square and nonempty, got " << a.rows()
            << "x" << a.cols();
        throw std::invalid_argument(msg.str());
    }
}

void require_same_dim(const Matrix& a, const Matrix& b, const char* where) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        std::ostringstream msg;
        msg << where << ": dimension mismatch, " << a.rows() << "x" << a.cols()
            << " vs " << b.rows() << "x" << b.cols();
        throw std::invalid_argument(msg.str());
    }
}

}  // namespace

Spectrum make_spectrum(std::vector<Cplx> values) {
    std::sort(values.begin(), values.end(), [](const Cplx& a, const Cplx& b) {
        if (a.real() != b.real()) return a.real() > b.real();
        return a.imag() > b.imag();
    });
    return Spectrum{std::move(values)};
}

Matrix commutator(const Matrix& a, const Matrix& b) {
    require_square(a, "commutator");
    require_same_dim(a, b, "commutator");
    return a * b - b * a;
}

Matrix traceless_part(const Matrix& h) {
    require_square(h, "traceless_part");
    const auto n = h.rows();
    return h - (h.trace() / static_cast<double>(n)) * Matrix::Identity(n, n);
}

double frobenius_inner(const Matrix& a, const Matrix& b) {
    require_same_dim(a, b, "frobenius_inner");
    return a.conjugate().cwiseProduct(b).sum().real();
}

double frobenius_norm(const Matrix& a) { return a.norm(); }

bool is_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a - a.adjoint()).norm() <= tol * (1.0 + a.norm());
}

bool is_skew_hermitian(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) return false;
    return (a + a.adjoint()).norm() <= tol * (1.0 + a.norm());
}

Residual orthonormal_residual(const Matrix& x, const std::vector<Matrix>& basis) {
#ifndef NDEBUG
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i; j < basis.size(); ++j) {
            const double ip = frobenius_inner(basis[i], basis[j]);
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(ip - expected) > 1e-9) {
                throw std::logic_error("orthonormal_residual: basis is not orthonormal");
            }
        }
    }
#endif
    Matrix r = x;
    for (const Matrix& b : basis) {
        require_same_dim(x, b, "orthonormal_residual");
        r -= frobenius_inner(b, r) * b;
    }
    const double norm = r.norm();
    return Residual{std::move(r), norm};
}

std::vector<Vector> nullspace(const Matrix& m) {
    if (m.rows() < 1 || m.cols() < 1) {
        throw std::invalid_argument("nullspace: matrix must be nonempty");
    }
    Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    const double threshold = 1e-10 * smax;
    std::vector<Vector> basis;
    for (Eigen::Index i = 0; i < m.cols(); ++i) {
        if (i >= sv.size() || sv(i) <= threshold) {
            basis.push_back(svd.matrixV().col(i));
        }
    }
    return basis;
}

Spectrum eigenvalues(const Matrix& a) {
    require_square(a, "eigenvalues");
    Eigen::ComplexEigenSolver<Matrix> solver(a, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
        std::ostringstream msg;
        msg << "eigenvalues: solver failed to converge on " << a.rows() << "x"
            << a.cols() << " matrix:\n" << a;
        throw std::runtime_error(msg.str());
    }
    const auto& ev = solver.eigenvalues();
    return make_spectrum(std::vector<Cplx>(ev.data(), ev.data() + ev.size()));
}

Matrix hermitian_expm(const Matrix& h, double t) {
    require_square(h, "hermitian_expm");
    if (!is_hermitian(h, 1e-10)) {
        throw std::invalid_argument("hermitian_expm: input is not Hermitian within 1e-10");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_expm: eigendecomposition failed");
    }
    const auto& vals = solver.eigenvalues();
    const Matrix& vecs = solver.eigenvectors();
    Vector phases(vals.size());
    for (Eigen::Index k = 0; k < vals.size(); ++k) {
        phases(k) = std::exp(Cplx(0.0, -t * vals(k)));
    }
    return vecs * phases.asDiagonal() * vecs.adjoint();
}

}  // namespace dynlie
