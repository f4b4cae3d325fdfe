#include "dynlie/reachability.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dynlie {

namespace {

constexpr double kUnitaryTol = 1e-9;
constexpr double kForbiddenTol = 1e-6;

double phase_defect(const Matrix& k, const Matrix& j, double theta) {
    return (std::exp(Cplx(0.0, 2.0 * theta)) * k - j).norm();
}

// Minimum of ||e^{2 i theta} K - J|| over theta: 360-point grid followed by
// golden-section refinement around the best grid point.
double min_defect_over_phase(const Matrix& k, const Matrix& j) {
    constexpr int kGridPoints = 360;
    const double step = 2.0 * std::numbers::pi / kGridPoints;

    double best_theta = 0.0;
    double best = phase_defect(k, j, 0.0);
    for (int i = 1; i < kGridPoints; ++i) {
        const double theta = i * step;
        const double d = phase_defect(k, j, theta);
        if (d < best) {
            best = d;
            best_theta = theta;
        }
    }

    constexpr double kInvPhi = 0.6180339887498949;
    double lo = best_theta - step;
    double hi = best_theta + step;
    double t1 = hi - kInvPhi * (hi - lo);
    double t2 = lo + kInvPhi * (hi - lo);
    double f1 = phase_defect(k, j, t1);
    double f2 = phase_defect(k, j, t2);
    while (hi - lo > 1e-12) {
        if (f1 < f2) {
            hi = t2;
            t2 = t1;
            f2 = f1;
            t1 = hi - kInvPhi * (hi - lo);
            f1 = phase_defect(k, j, t1);
        } else {
            lo = t1;
            t1 = t2;
            f1 = f2;
            t2 = lo + kInvPhi * (hi - lo);
            f2 = phase_defect(k, j, t2);
        }
    }
    return std::min({best, f1, f2});
}

}  // namespace

TargetUnitary TargetUnitary::from_matrix(const Matrix& u, PhaseMode mode) {
    if (u.rows() != u.cols() || u.rows() < 1) {
        throw std::invalid_argument("TargetUnitary: matrix must be square and nonempty");
    }
    const auto n = u.rows();
    const double defect = (u.adjoint() * u - Matrix::Identity(n, n)).norm();
    if (defect > kUnitaryTol * (1.0 + u.norm())) {
        std::ostringstream msg;
        msg << "TargetUnitary: matrix is not unitary (||U^dag U - I|| = " << defect << ")";
        throw std::invalid_argument(msg.str());
    }
    return TargetUnitary{u, mode};
}

std::string_view forbidden_reason_name(ForbiddenReason reason) {
    switch (reason) {
        case ForbiddenReason::SymplecticViolation: return "symplectic-violation";
        case ForbiddenReason::CrossComponentCoupling: return "cross-component-coupling";
        case ForbiddenReason::DeterminantMismatch: return "determinant-mismatch";
    }
    return "?";
}

ReachabilityVerdict check_unitary(const TargetUnitary& u, const Classification& cls,
                                  const HamiltonianSet& hset) {
    if (u.matrix.rows() != hset.dim) {
        throw std::invalid_argument("check_unitary: unitary/system dimension mismatch");
    }

    if (cls.symplectic) {
        const Matrix& j = cls.symplectic->j;
        const Matrix k = u.matrix.transpose() * j * u.matrix;
        const double defect = u.phase_mode == PhaseMode::Strict
                                  ? (k - j).norm()
                                  : min_defect_over_phase(k, j);
        if (defect > kForbiddenTol) {
            ReachabilityVerdict verdict;
            verdict.forbidden = true;
            verdict.reason = ForbiddenReason::SymplecticViolation;
            verdict.witness = defect;
            verdict.detail = u.phase_mode == PhaseMode::Strict
                                 ? "||U^T J U - J|| exceeds tolerance"
                                 : "||U^T J U - J|| exceeds tolerance for every global phase";
            return verdict;
        }
    }

    const auto components = connected_components(coupling_graph(hset));
    if (components.size() > 1) {
        std::vector<int> component_of(hset.dim, 0);
        for (std::size_t c = 0; c < components.size(); ++c) {
            for (int v : components[c]) component_of[v] = static_cast<int>(c);
        }
        for (int i = 0; i < hset.dim; ++i) {
            for (int j = 0; j < hset.dim; ++j) {
                if (component_of[i] != component_of[j] &&
                    std::abs(u.matrix(i, j)) > kForbiddenTol) {
                    ReachabilityVerdict verdict;
                    verdict.forbidden = true;
                    verdict.reason = ForbiddenReason::CrossComponentCoupling;
                    verdict.witness = std::abs(u.matrix(i, j));
                    std::ostringstream detail;
                    detail << "entry (" << i << ", " << j
                           << ") couples disconnected subsystems";
                    verdict.detail = detail.str();
                    return verdict;
                }
            }
        }
    }

    if (u.phase_mode == PhaseMode::Strict && cls.algebra_type == AlgebraType::SuN &&
        !cls.has_identity_component) {
        const Cplx det = u.matrix.determinant();
        const double witness = std::abs(det - Cplx(1.0, 0.0));
        if (witness > kForbiddenTol) {
            ReachabilityVerdict verdict;
            verdict.forbidden = true;
            verdict.reason = ForbiddenReason::DeterminantMismatch;
            verdict.witness = witness;
            verdict.detail = "det U != 1 but the system generates only SU(N)";
            return verdict;
        }
    }

    ReachabilityVerdict verdict;
    verdict.detail = "all implementable necessary conditions hold";
    return verdict;
}

SpCounterexample sp_counterexample(int ell, const std::vector<double>& weights) {
    if (ell < 1 || static_cast<int>(weights.size()) != ell) {
        throw std::invalid_argument("sp_counterexample: need exactly ell weights");
    }
    const double cap = 1.0 / (2.0 * ell);
    double prev = 0.0;
    for (double w : weights) {
        if (!(w > prev) || !(w < cap)) {
            std::ostringstream msg;
            msg << "sp_counterexample: weights must satisfy 0 < w_1 < ... < w_" << ell
                << " < " << cap;
            throw std::invalid_argument(msg.str());
        }
        prev = w;
    }

    const int n = 2 * ell;
    Matrix x = Matrix::Zero(n, n);
    Matrix y = Matrix::Zero(n, n);
    for (int k = 0; k < ell; ++k) {
        x(k, k) = -weights[k];
        y(k, k) = -weights[k];
        x(ell + k, ell + k) = weights[k];
        y(ell + k, ell + k) = weights[k];
    }
    // rho1 swaps the first two entries of the negative block only.
    y(0, 0) = -weights[1];
    y(1, 1) = -weights[0];

    const Matrix base = cap * Matrix::Identity(n, n);
    return SpCounterexample{validate_density(base + x), validate_density(base + y), x, y};
}

Matrix propagate(const HamiltonianSet& hset, const ControlSchedule& schedule) {
    Matrix u = Matrix::Identity(hset.dim, hset.dim);
    for (const ScheduleSegment& seg : schedule.segments) {
        if (!(seg.duration > 0.0) || !std::isfinite(seg.duration)) {
            throw std::invalid_argument("propagate: segment duration must be positive and finite");
        }
        if (seg.amplitudes.size() != hset.controls.size()) {
            std::ostringstream msg;
            msg << "propagate: segment has " << seg.amplitudes.size()
                << " amplitudes, system has " << hset.controls.size() << " controls";
            throw std::invalid_argument(msg.str());
        }
        Matrix h = hset.h0;
        for (std::size_t m = 0; m < seg.amplitudes.size(); ++m) {
            if (!std::isfinite(seg.amplitudes[m])) {
                throw std::invalid_argument("propagate: amplitude must be finite");
            }
            h += seg.amplitudes[m] * hset.controls[m].matrix;
        }
        u = hermitian_expm(h, seg.duration) * u;
    }
    return u;
}

double group_invariant_defect(const Matrix& u, const SymplecticForm& form) {
    if (u.rows() != form.j.rows() || u.cols() != form.j.cols()) {
        throw std::invalid_argument("group_invariant_defect: dimension mismatch");
    }
    return (u.transpose() * form.j * u - form.j).norm();
}

}  // namespace dynlie
