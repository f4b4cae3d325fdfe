#include "dynlie/lie_algebra.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace dynlie {

namespace {

constexpr double kIndependenceTol = 1e-8;   // residual norm of a unit candidate
constexpr double kSkewHermTol = 1e-10;
constexpr double kDegenerateTol = 1e-8;     // smallest singular value of a J candidate
constexpr double kSpectrumTol = 1e-8;
constexpr double kPhasePivotTol = 1e-12;

// Kronecker product, used to assemble the vec-ed symplectic condition.
Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

// Gram-Schmidt insertion with one re-orthogonalization pass. Returns true if
// x was independent and got appended.
bool try_insert(std::vector<Matrix>& basis, const Matrix& x) {
    const double nx = x.norm();
    if (nx < 1e-12) return false;
    Matrix unit = x / nx;
    Matrix r = unit;
    for (const Matrix& b : basis) r -= frobenius_inner(b, r) * b;
    if (r.norm() <= kIndependenceTol) return false;
    for (const Matrix& b : basis) r -= frobenius_inner(b, r) * b;
    basis.push_back(r / r.norm());
    return true;
}

}  // namespace

GeneratorSet GeneratorSet::from_hamiltonians(const std::vector<Matrix>& hamiltonians) {
    GeneratorSet out;
    if (hamiltonians.empty()) {
        throw std::invalid_argument("GeneratorSet: at least one Hamiltonian required");
    }
    out.dim = static_cast<int>(hamiltonians.front().rows());
    for (const Matrix& h : hamiltonians) {
        if (!is_hermitian(h, kSkewHermTol)) {
            throw std::invalid_argument("GeneratorSet: Hamiltonian is not Hermitian");
        }
        out.generators.push_back(Cplx(0.0, 1.0) * h);
        out.traces.push_back(h.trace().real());
    }
    out.validate();
    return out;
}

void GeneratorSet::validate() const {
    if (generators.empty()) {
        throw std::invalid_argument("GeneratorSet: at least one generator required");
    }
    if (generators.size() != traces.size()) {
        throw std::invalid_argument("GeneratorSet: traces/generators length mismatch");
    }
    for (const Matrix& g : generators) {
        if (g.rows() != dim || g.cols() != dim) {
            throw std::invalid_argument("GeneratorSet: generator dimension mismatch");
        }
        if (!is_skew_hermitian(g, kSkewHermTol)) {
            throw std::invalid_argument("GeneratorSet: generator is not skew-Hermitian");
        }
    }
}

AlgebraBasis generate_closure(const GeneratorSet& gens) {
    gens.validate();
    const int n = gens.dim;
    const int cap = n * n - 1;

    std::vector<Matrix> basis;
    for (const Matrix& g : gens.generators) {
        try_insert(basis, traceless_part(g));
        if (static_cast<int>(basis.size()) >= cap) break;
    }

    // Breadth-first over unordered pairs; new elements join the scan as the
    // list grows, and we re-scan until a full pass adds nothing.
    bool changed = static_cast<int>(basis.size()) < cap;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            for (std::size_t j = i + 1; j < basis.size(); ++j) {
                if (static_cast<int>(basis.size()) >= cap) {
                    return AlgebraBasis{n, std::move(basis)};
                }
                if (try_insert(basis, commutator(basis[i], basis[j]))) {
                    changed = true;
                }
            }
        }
    }
    return AlgebraBasis{n, std::move(basis)};
}

bool contains(const AlgebraBasis& basis, const Matrix& x, std::string* diagnostic) {
    if (x.rows() != basis.dim_space || x.cols() != basis.dim_space) {
        if (diagnostic) *diagnostic = "dimension mismatch with algebra carrier space";
        return false;
    }
    const double nx = x.norm();
    if (nx < 1e-12) return true;  // zero matrix is trivially in the span
    if (std::abs(x.trace()) > 1e-9 * (1.0 + nx)) {
        if (diagnostic) *diagnostic = "matrix is not traceless within 1e-9";
        return false;
    }
    if (!is_skew_hermitian(x, 1e-9)) {
        if (diagnostic) *diagnostic = "matrix is not skew-Hermitian within 1e-9";
        return false;
    }
    return orthonormal_residual(x / nx, basis.elements).norm < kIndependenceTol;
}

std::optional<SymplecticForm> find_symplectic_form(const GeneratorSet& gens) {
    gens.validate();
    const int n = gens.dim;
    if (n % 2 != 0) {
        throw std::invalid_argument("find_symplectic_form: dimension must be even");
    }
    const Matrix id = Matrix::Identity(n, n);

    // vec(A^T J + J A) = (I (x) A^T + A^T (x) I) vec(J), column-major vec.
    Matrix stacked(static_cast<Eigen::Index>(gens.generators.size()) * n * n, n * n);
    for (std::size_t m = 0; m < gens.generators.size(); ++m) {
        const Matrix at = traceless_part(gens.generators[m]).transpose();
        stacked.middleRows(static_cast<Eigen::Index>(m) * n * n, n * n) =
            kron(id, at) + kron(at, id);
    }

    for (const Vector& v : nullspace(stacked)) {
        Matrix candidate = Eigen::Map<const Matrix>(v.data(), n, n);
        candidate = 0.5 * (candidate - candidate.transpose());

        Eigen::JacobiSVD<Matrix> svd(candidate);
        const double smin = svd.singularValues()(n - 1);
        if (smin < kDegenerateTol) continue;  // degenerate antisymmetric part
        const double smax = svd.singularValues()(0);
        candidate /= smax;

        // Null vectors carry an arbitrary complex phase; rotate so the first
        // significant entry in row-major order is real positive. For real
        // candidates this is exactly a sign fix.
        Cplx pivot(0.0, 0.0);
        for (Eigen::Index i = 0; i < n && pivot == Cplx(0.0, 0.0); ++i) {
            for (Eigen::Index j = 0; j < n; ++j) {
                if (std::abs(candidate(i, j)) > kPhasePivotTol) {
                    pivot = candidate(i, j);
                    break;
                }
            }
        }
        if (pivot == Cplx(0.0, 0.0)) continue;
        candidate *= std::conj(pivot) / std::abs(pivot);

        if (is_standard_equivalent(candidate)) {
            return SymplecticForm{std::move(candidate), smax};
        }
    }
    return std::nullopt;
}

bool is_standard_equivalent(const Matrix& j) {
    if (j.rows() != j.cols()) {
        throw std::invalid_argument("is_standard_equivalent: matrix must be square");
    }
    const Eigen::Index n = j.rows();
    if (n % 2 != 0) {
        throw std::invalid_argument("is_standard_equivalent: dimension must be even");
    }
    Eigen::JacobiSVD<Matrix> svd(j);
    const double smax = svd.singularValues()(0);
    if (smax < 1e-300) return false;
    const Spectrum spec = eigenvalues(j / smax);

    Eigen::Index plus = 0, minus = 0;
    for (const Cplx& ev : spec.values) {
        if (std::abs(ev - Cplx(0.0, 1.0)) < kSpectrumTol) {
            ++plus;
        } else if (std::abs(ev - Cplx(0.0, -1.0)) < kSpectrumTol) {
            ++minus;
        } else {
            return false;
        }
    }
    return plus == n / 2 && minus == n / 2;
}

Matrix standard_symplectic_form(int half_n) {
    if (half_n < 1) {
        throw std::invalid_argument("standard_symplectic_form: half_n must be positive");
    }
    const int n = 2 * half_n;
    Matrix j = Matrix::Zero(n, n);
    j.topRightCorner(half_n, half_n) = Matrix::Identity(half_n, half_n);
    j.bottomLeftCorner(half_n, half_n) = -Matrix::Identity(half_n, half_n);
    return j;
}

Classification classify(const GeneratorSet& gens) {
    Classification cls;
    AlgebraBasis basis = generate_closure(gens);
    const int n = gens.dim;
    cls.dimension = basis.dimension();

    for (double tr : gens.traces) {
        if (std::abs(tr) > 1e-10) {
            cls.has_identity_component = true;
            break;
        }
    }

    if (cls.dimension == n * n - 1) {
        cls.algebra_type = AlgebraType::SuN;
    } else if (n % 2 == 0 && cls.dimension == n * (n + 1) / 2) {
        if (auto form = find_symplectic_form(gens)) {
            cls.algebra_type = AlgebraType::SpHalfN;
            cls.symplectic = std::move(form);
        }
    }

    const bool su = cls.algebra_type == AlgebraType::SuN;
    const bool sp = cls.algebra_type == AlgebraType::SpHalfN;
    cls.degrees.completely = su && cls.has_identity_component;
    cls.degrees.density_matrix = su;
    cls.degrees.observable = su;
    cls.degrees.pure_state = su || sp;
    return cls;
}

}  // namespace dynlie
