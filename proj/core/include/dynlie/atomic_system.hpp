// atomic_system.hpp — Hamiltonians for transitions between two atomic levels
// with Zeeman-degenerate sublevels, polarization selection rules, decomposition
// into non-interacting subsystems, and full-system controllability reports.

#pragma once

#include "dynlie/lie_algebra.hpp"
#include "dynlie/matrix_ops.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dynlie {

enum class Polarization { Pi, SigmaPlus, SigmaMinus };

// "pi", "sigma+", "sigma-"
std::string_view polarization_name(Polarization p);
std::optional<Polarization> polarization_from_name(std::string_view name);

struct LevelSpec {
    int f = 0;           // non-negative integer; 2F+1 sublevels
    double energy = 0.0;
};

struct AtomicSystemSpec {
    LevelSpec lower;
    LevelSpec upper;
    double dipole = 1.0;                      // shared coupling strength, != 0
    std::vector<Polarization> polarizations;  // nonempty, no duplicates
    bool alkali_m0_suppressed = false;        // zero the m=0 <-> m=0 pi entry

    // Throws std::invalid_argument if |F_upper - F_lower| > 1, dipole == 0,
    // F negative, or the polarization set is empty / has duplicates.
    void validate() const;
};

struct StateLabel {
    int level = 0;  // 0 lower, 1 upper
    int m = 0;
};

struct Control {
    std::string label;  // polarization name, or "H1".."HM" for raw systems
    Matrix matrix;
};

struct HamiltonianSet {
    int dim = 0;
    Matrix h0;
    std::vector<Control> controls;
    std::vector<StateLabel> state_labels;   // empty for raw systems
    std::vector<Polarization> dropped;      // requested but empty -> omitted
};

struct CouplingGraph {
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Canonical state order: lower level m = -F..+F, then upper m = -F'..+F'.
// One control per requested polarization; entries d at every sublevel pair
// allowed by the selection rule (pi: same m; sigma+: m_upper = m_lower + 1;
// sigma-: mirror). Polarizations whose matrix comes out all-zero are dropped
// and recorded; throws std::invalid_argument if every control is empty.
HamiltonianSet build_hamiltonians(const AtomicSystemSpec& spec);

// Edge (i, j) present iff some control has |entry(i,j)| > 1e-14.
CouplingGraph coupling_graph(const HamiltonianSet& hset);

std::vector<std::vector<int>> connected_components(const CouplingGraph& graph);

struct Subsystem {
    std::vector<int> indices;      // ascending; the block's global state ids
    HamiltonianSet restricted;     // h0 and nonzero controls on the block
    bool trivial = false;          // singleton component
};

// Connected components of the coupling graph, each with the restriction of
// h0 and of every control that is nonzero on the block. The index sets
// partition 0..N-1; components are ordered by their smallest state index.
std::vector<Subsystem> decompose(const HamiltonianSet& hset);

struct ComponentReport {
    std::vector<int> indices;
    bool trivial = false;
    Classification classification;
};

struct SystemReport {
    std::optional<AtomicSystemSpec> spec;  // echo; absent for raw systems
    Classification global;
    std::vector<ComponentReport> components;
    std::vector<std::string> warnings;
    std::string summary;  // human-readable degree-of-controllability verdict
};

// Builds the Hamiltonians and classifies the full system plus every connected
// component (block classifications re-project the trace within the block).
SystemReport analyze_system(const AtomicSystemSpec& spec);

// Same analysis for an explicit drift + control matrices (no selection-rule
// provenance); controls are labelled H1..HM.
SystemReport analyze_hamiltonians(const Matrix& h0, const std::vector<Matrix>& controls);

}  // namespace dynlie
