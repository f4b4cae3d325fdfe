// kinematics.hpp — density matrices, pure/mixed classification, kinematical
// equivalence, and expectation-value bounds with the extremal states that
// attain them.

#pragma once

#include "dynlie/matrix_ops.hpp"

#include <stdexcept>
#include <string>

namespace dynlie {

enum class DensityViolation { NonSquare, NonHermitian, NegativeEigenvalue, TraceNotOne };

class DensityValidationError : public std::runtime_error {
public:
    DensityValidationError(DensityViolation violation, const std::string& what)
        : std::runtime_error(what), violation_(violation) {}

    DensityViolation violation() const { return violation_; }

private:
    DensityViolation violation_;
};

// Positive-semidefinite trace-one state with its spectral data cached.
// spectrum holds the weights w_n in descending order (imaginary parts zero);
// eigenvectors columns are matched to that order.
struct DensityMatrix {
    Matrix matrix;
    Spectrum spectrum;
    Matrix eigenvectors;
};

struct Observable {
    Matrix matrix;
    Spectrum spectrum;     // lambda_n descending
    Matrix eigenvectors;

    // Throws std::invalid_argument unless a is Hermitian within 1e-10.
    static Observable from_matrix(const Matrix& a);
};

// Checks Hermiticity, eigenvalue non-negativity (>= -1e-10), and unit trace
// (within 1e-10); throws DensityValidationError naming the first violation.
DensityMatrix validate_density(const Matrix& rho);

struct PurityClass {
    bool pure = false;
    int rank = 0;  // eigenvalues above 1e-9
};

PurityClass purity_class(const DensityMatrix& rho);

// True iff the sorted spectra agree elementwise within 1e-9 — equivalently,
// iff one state is a unitary conjugate of the other.
bool kinematically_equivalent(const DensityMatrix& a, const DensityMatrix& b);

struct ExpectationBounds {
    double lo = 0.0;
    double hi = 0.0;
};

// hi = sum_n w_n lambda_n and lo = sum_n w_n lambda_{N+1-n}, both sequences
// descending: the kinematically admissible range of Tr(rho' A) over the
// unitary orbit of rho.
ExpectationBounds expectation_bounds(const DensityMatrix& rho, const Observable& a);

struct ExtremalStates {
    DensityMatrix rho_minus;
    DensityMatrix rho_plus;
};

// rho_plus pairs the descending weights with the descending eigenvectors of
// A (attains hi); rho_minus pairs them in reverse (attains lo).
ExtremalStates extremal_states(const DensityMatrix& rho, const Observable& a);

}  // namespace dynlie
