// Shared test fixtures and independent oracles. Everything here is test-only
// and deliberately avoids the library code paths it is used to check.

#pragma once

#include "dynlie/atomic_system.hpp"
#include "dynlie/lie_algebra.hpp"
#include "dynlie/matrix_ops.hpp"

#include <random>
#include <vector>

namespace testutil {

using dynlie::Cplx;
using dynlie::Matrix;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline Matrix random_complex(int n, std::mt19937_64& gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            m(i, j) = Cplx(normal(gen), normal(gen));
        }
    }
    return m;
}

// Haar-ish unitary from the QR factorization of a complex Gaussian matrix.
inline Matrix random_unitary(int n, std::mt19937_64& gen) {
    Eigen::HouseholderQR<Matrix> qr(random_complex(n, gen));
    Matrix q = qr.householderQ();
    Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int k = 0; k < n; ++k) {
        const Cplx d = r(k, k);
        q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : Cplx(1.0, 0.0);
    }
    return q;
}

inline Matrix random_hermitian(int n, std::mt19937_64& gen) {
    const Matrix m = random_complex(n, gen);
    return 0.5 * (m + m.adjoint());
}

inline Matrix random_density(int n, std::mt19937_64& gen) {
    const Matrix m = random_complex(n, gen);
    Matrix rho = m * m.adjoint();
    return rho / rho.trace().real();
}

// Pauli matrices.
inline Matrix sigma_x() {
    Matrix s(2, 2);
    s << 0, 1, 1, 0;
    return s;
}
inline Matrix sigma_y() {
    Matrix s(2, 2);
    s << Cplx(0, 0), Cplx(0, -1), Cplx(0, 1), Cplx(0, 0);
    return s;
}
inline Matrix sigma_z() {
    Matrix s(2, 2);
    s << 1, 0, 0, -1;
    return s;
}

// ---- the published F=1 -> F=1 matrices in their original interleaved state
// order (lower/upper pairs per m), used as permutation fixtures ----

inline Matrix paper_f11_h0(double e1, double e2) {
    Matrix h = Matrix::Zero(6, 6);
    h.diagonal() << e1, e2, e1, e2, e1, e2;
    return h;
}

inline Matrix sym_entries(int n, std::initializer_list<std::pair<int, int>> pairs, double d) {
    Matrix h = Matrix::Zero(n, n);
    for (const auto& [i, j] : pairs) {
        h(i, j) = d;
        h(j, i) = d;
    }
    return h;
}

inline Matrix paper_f11_h1(double d) { return sym_entries(6, {{0, 1}, {2, 3}, {4, 5}}, d); }
inline Matrix paper_f11_h2(double d) { return sym_entries(6, {{1, 2}, {3, 4}}, d); }
inline Matrix paper_f11_h3(double d) { return sym_entries(6, {{0, 3}, {2, 5}}, d); }

// Permutation p[c] = interleaved index of canonical state c, as a matrix:
// P * H_canonical * P^T = H_interleaved.
inline Matrix f11_order_permutation() {
    const int p[6] = {0, 2, 4, 1, 3, 5};
    Matrix perm = Matrix::Zero(6, 6);
    for (int c = 0; c < 6; ++c) perm(p[c], c) = 1.0;
    return perm;
}

// The explicit 6x6 invariant form of the interleaved F=1 -> F=1 system.
inline Matrix f11_published_j() {
    Matrix j = Matrix::Zero(6, 6);
    j(0, 5) = 1;
    j(1, 4) = -1;
    j(2, 3) = 1;
    j(3, 2) = -1;
    j(4, 1) = 1;
    j(5, 0) = -1;
    return j;
}

// ---- independent basis of the compact symplectic algebra ----
// Skew-Hermitian X with X^T J + J X = 0 for the standard J decompose in
// l x l blocks as X = [[a, b], [-b, a]] + i [[p, q], [q, -p]] with a real
// antisymmetric and b, p, q real symmetric. Enumerating those parameter
// matrices yields a spanning set of dimension l^2 + l(l+1) = l(2l+1),
// entirely bypassing the null-space search used by the library.
inline std::vector<Matrix> compact_sp_spanning_set(int ell) {
    const int n = 2 * ell;
    std::vector<Matrix> out;
    auto embed_real = [&](const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) -> Matrix {
        Matrix x = Matrix::Zero(n, n);
        x.topLeftCorner(ell, ell) = a.cast<Cplx>();
        x.bottomRightCorner(ell, ell) = a.cast<Cplx>();
        x.topRightCorner(ell, ell) = b.cast<Cplx>();
        x.bottomLeftCorner(ell, ell) = -b.cast<Cplx>();
        return x;
    };
    auto embed_imag = [&](const Eigen::MatrixXd& p, const Eigen::MatrixXd& q) -> Matrix {
        Matrix x = Matrix::Zero(n, n);
        x.topLeftCorner(ell, ell) = p.cast<Cplx>();
        x.bottomRightCorner(ell, ell) = -p.cast<Cplx>();
        x.topRightCorner(ell, ell) = q.cast<Cplx>();
        x.bottomLeftCorner(ell, ell) = q.cast<Cplx>();
        return Cplx(0.0, 1.0) * x;
    };
    const Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(ell, ell);
    for (int i = 0; i < ell; ++i) {
        for (int j = i; j < ell; ++j) {
            if (j > i) {
                Eigen::MatrixXd anti = zero;
                anti(i, j) = 1.0;
                anti(j, i) = -1.0;
                out.push_back(embed_real(anti, zero));
            }
            Eigen::MatrixXd sym = zero;
            sym(i, j) = sym(j, i) = 1.0;
            out.push_back(embed_real(zero, sym));
            out.push_back(embed_imag(sym, zero));
            out.push_back(embed_imag(zero, sym));
        }
    }
    return out;
}

// Orthonormal basis of the compact sp(l) algebra attached to the standard J.
inline dynlie::AlgebraBasis compact_sp_basis(int ell) {
    dynlie::GeneratorSet gens;
    gens.dim = 2 * ell;
    gens.generators = compact_sp_spanning_set(ell);
    gens.traces.assign(gens.generators.size(), 0.0);
    return dynlie::generate_closure(gens);
}

inline dynlie::AtomicSystemSpec make_spec(int f_lower, int f_upper, double e1, double e2,
                                          std::vector<dynlie::Polarization> pols,
                                          bool alkali = false) {
    dynlie::AtomicSystemSpec spec;
    spec.lower = {f_lower, e1};
    spec.upper = {f_upper, e2};
    spec.dipole = 1.0;
    spec.polarizations = std::move(pols);
    spec.alkali_m0_suppressed = alkali;
    return spec;
}

inline dynlie::GeneratorSet generators_of(const dynlie::HamiltonianSet& hset) {
    std::vector<Matrix> hams{hset.h0};
    for (const auto& c : hset.controls) hams.push_back(c.matrix);
    return dynlie::GeneratorSet::from_hamiltonians(hams);
}

constexpr dynlie::Polarization kPi = dynlie::Polarization::Pi;
constexpr dynlie::Polarization kSp = dynlie::Polarization::SigmaPlus;
constexpr dynlie::Polarization kSm = dynlie::Polarization::SigmaMinus;

}  // namespace testutil
