// reachability.hpp — necessary-condition checks for dynamical realizability of
// target unitaries, the symplectic mixed-state counterexample generator, and a
// piecewise-constant propagator.

#pragma once

#include "dynlie/atomic_system.hpp"
#include "dynlie/kinematics.hpp"
#include "dynlie/lie_algebra.hpp"
#include "dynlie/matrix_ops.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dynlie {

enum class PhaseMode { Projective, Strict };

struct TargetUnitary {
    Matrix matrix;
    PhaseMode phase_mode = PhaseMode::Projective;

    // Throws std::invalid_argument unless u is unitary within 1e-9.
    static TargetUnitary from_matrix(const Matrix& u,
                                     PhaseMode mode = PhaseMode::Projective);
};

enum class ForbiddenReason {
    SymplecticViolation,      // U^T J U != J (modulo phase in projective mode)
    CrossComponentCoupling,   // nonzero entry between disconnected subsystems
    DeterminantMismatch,      // det U != 1 for a traceless su(N) system
};

std::string_view forbidden_reason_name(ForbiddenReason reason);

struct ReachabilityVerdict {
    bool forbidden = false;
    std::optional<ForbiddenReason> reason;
    double witness = 0.0;  // defect norm / cross-entry magnitude / |det - 1|
    std::string detail;
};

// Applies every implementable necessary condition for U to be dynamically
// generated by the classified system. A pass is not a reachability proof;
// a forbidden verdict is conclusive and carries its witness.
ReachabilityVerdict check_unitary(const TargetUnitary& u, const Classification& cls,
                                  const HamiltonianSet& hset);

struct SpCounterexample {
    DensityMatrix rho0;
    DensityMatrix rho1;
    Matrix x;  // diag(-w_1..-w_l, w_1..w_l)
    Matrix y;  // same with w_1, w_2 swapped in the negative block
};

// Builds the kinematically equivalent pair rho0 = I/(2l) + x, rho1 = I/(2l) + y
// with 2l distinct eigenvalues; i*x is compatible with the standard symplectic
// form while i*y is not, so rho1 is unreachable from rho0 under an sp(l)
// dynamical algebra. Requires 0 < w_1 < ... < w_l < 1/(2l); throws otherwise.
SpCounterexample sp_counterexample(int ell, const std::vector<double>& weights);

struct ScheduleSegment {
    double duration = 0.0;            // > 0
    std::vector<double> amplitudes;   // one f_m per control
};

struct ControlSchedule {
    std::vector<ScheduleSegment> segments;
};

// Product of exp(-i dt (H0 + sum_m f_m H_m)) over the segments, earliest
// first. Throws std::invalid_argument if a segment's amplitude count differs
// from the number of controls or a duration is not positive and finite.
Matrix propagate(const HamiltonianSet& hset, const ControlSchedule& schedule);

// Frobenius norm of U^T J U - J.
double group_invariant_defect(const Matrix& u, const SymplecticForm& form);

}  // namespace dynlie
