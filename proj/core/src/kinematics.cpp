#include "dynlie/kinematics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dynlie {

namespace {

constexpr double kHermTol = 1e-10;
constexpr double kRankTol = 1e-9;
constexpr double kEquivTol = 1e-9;

struct EigenData {
    Spectrum spectrum;
    Matrix vectors;
};

// Spectral data of a Hermitian matrix, descending eigenvalue order.
EigenData hermitian_eigendata(const Matrix& a) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eigendata: eigendecomposition failed");
    }
    const auto n = a.rows();
    EigenData out;
    out.spectrum.values.reserve(n);
    out.vectors.resize(n, n);
    // SelfAdjointEigenSolver sorts ascending; flip to descending.
    for (Eigen::Index k = 0; k < n; ++k) {
        out.spectrum.values.emplace_back(solver.eigenvalues()(n - 1 - k), 0.0);
        out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
    }
    return out;
}

DensityMatrix weighted_mixture(const std::vector<double>& weights, const Matrix& vectors) {
    const auto n = vectors.rows();
    Matrix rho = Matrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        rho += weights[static_cast<std::size_t>(k)] * vectors.col(k) * vectors.col(k).adjoint();
    }
    return validate_density(rho);
}

}  // namespace

Observable Observable::from_matrix(const Matrix& a) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument("Observable: matrix must be square and nonempty");
    }
    if (!is_hermitian(a, kHermTol)) {
        throw std::invalid_argument("Observable: matrix is not Hermitian within 1e-10");
    }
    EigenData data = hermitian_eigendata(a);
    return Observable{a, std::move(data.spectrum), std::move(data.vectors)};
}

DensityMatrix validate_density(const Matrix& rho) {
    if (rho.rows() != rho.cols() || rho.rows() < 1) {
        throw DensityValidationError(DensityViolation::NonSquare,
                                     "density matrix must be square and nonempty");
    }
    if (!is_hermitian(rho, kHermTol)) {
        throw DensityValidationError(DensityViolation::NonHermitian,
                                     "density matrix is not Hermitian within 1e-10");
    }
    EigenData data = hermitian_eigendata(rho);
    for (const Cplx& w : data.spectrum.values) {
        if (w.real() < -1e-10) {
            std::ostringstream msg;
            msg << "density matrix has negative eigenvalue " << w.real();
            throw DensityValidationError(DensityViolation::NegativeEigenvalue, msg.str());
        }
    }
    const double trace = rho.trace().real();
    if (std::abs(trace - 1.0) > 1e-10) {
        std::ostringstream msg;
        msg << "density matrix trace is " << trace << ", expected 1";
        throw DensityValidationError(DensityViolation::TraceNotOne, msg.str());
    }
    return DensityMatrix{rho, std::move(data.spectrum), std::move(data.vectors)};
}

PurityClass purity_class(const DensityMatrix& rho) {
    int rank = 0;
    for (const Cplx& w : rho.spectrum.values) {
        if (w.real() > kRankTol) ++rank;
    }
    return PurityClass{rank == 1, rank};
}

bool kinematically_equivalent(const DensityMatrix& a, const DensityMatrix& b) {
    if (a.matrix.rows() != b.matrix.rows()) {
        throw std::invalid_argument("kinematically_equivalent: dimension mismatch");
    }
    for (std::size_t k = 0; k < a.spectrum.values.size(); ++k) {
        if (std::abs(a.spectrum.values[k].real() - b.spectrum.values[k].real()) > kEquivTol) {
            return false;
        }
    }
    return true;
}

ExpectationBounds expectation_bounds(const DensityMatrix& rho, const Observable& a) {
    if (rho.matrix.rows() != a.matrix.rows()) {
        throw std::invalid_argument("expectation_bounds: dimension mismatch");
    }
    const std::size_t n = rho.spectrum.values.size();
    ExpectationBounds bounds;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = rho.spectrum.values[k].real();
        bounds.hi += w * a.spectrum.values[k].real();
        bounds.lo += w * a.spectrum.values[n - 1 - k].real();
    }
    return bounds;
}

ExtremalStates extremal_states(const DensityMatrix& rho, const Observable& a) {
    if (rho.matrix.rows() != a.matrix.rows()) {
        throw std::invalid_argument("extremal_states: dimension mismatch");
    }
    const std::size_t n = rho.spectrum.values.size();
    std::vector<double> weights(n), reversed(n);
    for (std::size_t k = 0; k < n; ++k) {
        weights[k] = rho.spectrum.values[k].real();
        reversed[n - 1 - k] = weights[k];
    }
    return ExtremalStates{weighted_mixture(reversed, a.eigenvectors),
                          weighted_mixture(weights, a.eigenvectors)};
}

}  // namespace dynlie
