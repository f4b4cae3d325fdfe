// json_io.hpp — JSON encodings used across the project: matrices, atomic
// system specs, density/observable wrappers, control schedules, raw
// Hamiltonian lists, and analysis reports. All serializers emit canonical
// JSON (sorted keys, 17-significant-digit floats) so output round-trips
// byte-identically.

#pragma once

#include "dynlie/atomic_system.hpp"
#include "dynlie/kinematics.hpp"
#include "dynlie/reachability.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dynlie {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// {"dim": N, "entries": [[[re, im] x N] x N]}, row-major.
std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

// {"lower": {"F":..,"energy":..}, "upper": {...}, "dipole": ..,
//  "polarizations": ["pi","sigma+","sigma-"], "alkali_m0_suppressed": bool}
// Unknown fields are rejected; alkali_m0_suppressed defaults to false.
std::string spec_to_json(const AtomicSystemSpec& spec);
AtomicSystemSpec spec_from_json(const std::string& text);

// {"kind": "density"|"observable", "matrix": {...}}
std::string wrapped_matrix_to_json(const Matrix& m, const std::string& kind);
Matrix wrapped_matrix_from_json(const std::string& text, const std::string& expected_kind);

// {"segments": [{"dt": 0.1, "f": [0.3, -0.2]}, ...]}
std::string schedule_to_json(const ControlSchedule& schedule);
ControlSchedule schedule_from_json(const std::string& text);

// {"hamiltonians": [matrix, ...]}; first entry is the drift H0.
std::string hamiltonian_list_to_json(const std::vector<Matrix>& hamiltonians);
std::vector<Matrix> hamiltonian_list_from_json(const std::string& text);

std::string report_to_json(const SystemReport& report);

std::string verdict_to_json(const ReachabilityVerdict& verdict);

std::string bounds_report_to_json(const ExpectationBounds& bounds, double trace,
                                  const ExtremalStates& extremes);

struct CounterexampleChecks {
    bool kinematically_equivalent = false;
    double x_form_defect = 0.0;  // should vanish
    double y_form_defect = 0.0;  // should not
};

std::string counterexample_to_json(const SpCounterexample& bundle,
                                   const CounterexampleChecks& checks);

// Parses arbitrary JSON and re-emits it canonically. Output of the
// serializers above is a fixed point of this function.
std::string canonicalize_json(const std::string& text);

std::string read_text_file(const std::string& path);  // throws ParseError

}  // namespace dynlie
