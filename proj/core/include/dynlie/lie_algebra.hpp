// lie_algebra.hpp — dynamical Lie algebra machinery: commutator closure,
// symplectic-form detection, and the controllability classification.

#pragma once

#include "dynlie/matrix_ops.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dynlie {

// The skew-Hermitian generators i*H_m of the dynamical Lie algebra, together
// with the traces of the underlying Hamiltonians (the u(1) bookkeeping).
struct GeneratorSet {
    int dim = 0;
    std::vector<Matrix> generators;  // i*H_m, skew-Hermitian within 1e-10
    std::vector<double> traces;      // Tr H_m

    // Multiplies each Hermitian H_m by i and records its trace.
    static GeneratorSet from_hamiltonians(const std::vector<Matrix>& hamiltonians);

    // Throws std::invalid_argument if empty, non-square, mismatched, or not
    // skew-Hermitian within tolerance.
    void validate() const;
};

// Orthonormal (under frobenius_inner) basis of traceless skew-Hermitian
// matrices spanning the generated algebra.
struct AlgebraBasis {
    int dim_space = 0;
    std::vector<Matrix> elements;

    int dimension() const { return static_cast<int>(elements.size()); }
};

// Antisymmetric J with J*J = -I after normalization; certifies sp(N/2).
struct SymplecticForm {
    Matrix j;
    double normalization = 1.0;  // largest singular value divided out
};

enum class AlgebraType { SuN, SpHalfN, Other };

struct ControllabilityDegrees {
    bool completely = false;
    bool density_matrix = false;
    bool observable = false;
    bool pure_state = false;
};

struct Classification {
    AlgebraType algebra_type = AlgebraType::Other;
    int dimension = 0;
    bool has_identity_component = false;  // some Tr H_m != 0
    std::optional<SymplecticForm> symplectic;
    ControllabilityDegrees degrees;
};

// Commutator closure of the traceless parts of the generators: project,
// normalize, insert independent ones, then scan unordered pairs of basis
// elements breadth-first, inserting each commutator whose residual against
// the current basis exceeds 1e-8 after normalization. Terminates when a full
// pass adds nothing or the dimension reaches N^2 - 1.
AlgebraBasis generate_closure(const GeneratorSet& gens);

// True iff x lies in span(basis): residual norm of x/|x| below 1e-8. Requires
// x traceless skew-Hermitian within 1e-9; otherwise returns false and, when
// diagnostic is non-null, explains which precondition failed.
bool contains(const AlgebraBasis& basis, const Matrix& x,
              std::string* diagnostic = nullptr);

// Solves (i H~_m)^T J + J (i H~_m) = 0 for all generators as one stacked
// linear system, scans the null space for an antisymmetric nondegenerate
// candidate with eigenvalues {+i, -i} each of multiplicity N/2, and returns
// it normalized to unit singular values with the leading entry made real
// positive. Empty result means no invariant symplectic form exists.
std::optional<SymplecticForm> find_symplectic_form(const GeneratorSet& gens);

// True iff the eigenvalue multiset of J is {+i, -i} with multiplicity N/2
// each, within 1e-8, after unit-singular-value normalization. Throws on odd
// dimension.
bool is_standard_equivalent(const Matrix& j);

// [[0, I], [-I, 0]] of size 2*half_n.
Matrix standard_symplectic_form(int half_n);

// Runs the closure and applies the dimension tests: N^2 - 1 means su(N);
// N(N+1)/2 at even N with an invariant J means sp(N/2); anything else is
// reported as Other with its dimension. Controllability degrees follow from
// the algebra type and the presence of the identity component.
Classification classify(const GeneratorSet& gens);

}  // namespace dynlie
