#include "dynlie/atomic_system.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dynlie {

namespace {

constexpr double kEdgeTol = 1e-14;

int delta_m(Polarization p) {
    switch (p) {
        case Polarization::Pi: return 0;
        case Polarization::SigmaPlus: return +1;
        case Polarization::SigmaMinus: return -1;
    }
    return 0;
}

GeneratorSet generators_of(const HamiltonianSet& hset) {
    std::vector<Matrix> hams;
    hams.reserve(hset.controls.size() + 1);
    hams.push_back(hset.h0);
    for (const Control& c : hset.controls) hams.push_back(c.matrix);
    return GeneratorSet::from_hamiltonians(hams);
}

std::string describe_degrees(const Classification& cls, std::size_t nontrivial_components) {
    if (nontrivial_components > 1) {
        std::ostringstream out;
        out << "not controllable as a whole: decomposes into " << nontrivial_components
            << " non-interacting subsystems (see per-component results)";
        return out.str();
    }
    if (cls.degrees.completely) return "completely controllable";
    if (cls.degrees.density_matrix) {
        return "density-matrix and observable controllable (every kinematically "
               "admissible state and expectation value is reachable)";
    }
    if (cls.degrees.pure_state) {
        return "pure-state controllable only: symplectic structure obstructs "
               "density-matrix and observable controllability";
    }
    return "not controllable in any of the defined senses";
}

SystemReport analyze_set(HamiltonianSet hset, std::optional<AtomicSystemSpec> spec_echo) {
    SystemReport report;
    report.spec = std::move(spec_echo);
    for (Polarization p : hset.dropped) {
        std::ostringstream warning;
        warning << "polarization '" << polarization_name(p)
                << "' couples no sublevel pair and was omitted";
        report.warnings.push_back(warning.str());
    }

    report.global = classify(generators_of(hset));

    std::size_t nontrivial = 0;
    for (Subsystem& sub : decompose(hset)) {
        ComponentReport comp;
        comp.indices = std::move(sub.indices);
        comp.trivial = sub.trivial;
        if (sub.trivial) {
            // An uncoupled state only accrues phase; classify trivially.
            comp.classification.dimension = 0;
            comp.classification.algebra_type = AlgebraType::Other;
            comp.classification.has_identity_component =
                std::abs(sub.restricted.h0(0, 0)) > 1e-10;
            std::ostringstream warning;
            warning << "state " << comp.indices.front()
                    << " is uncoupled from every control field";
            report.warnings.push_back(warning.str());
        } else {
            comp.classification = classify(generators_of(sub.restricted));
            ++nontrivial;
        }
        report.components.push_back(std::move(comp));
    }

    report.summary = describe_degrees(report.global, nontrivial);
    return report;
}

}  // namespace

std::string_view polarization_name(Polarization p) {
    switch (p) {
        case Polarization::Pi: return "pi";
        case Polarization::SigmaPlus: return "sigma+";
        case Polarization::SigmaMinus: return "sigma-";
    }
    return "?";
}

std::optional<Polarization> polarization_from_name(std::string_view name) {
    if (name == "pi") return Polarization::Pi;
    if (name == "sigma+") return Polarization::SigmaPlus;
    if (name == "sigma-") return Polarization::SigmaMinus;
    return std::nullopt;
}

void AtomicSystemSpec::validate() const {
    if (lower.f < 0 || upper.f < 0) {
        throw std::invalid_argument("AtomicSystemSpec: F must be a non-negative integer");
    }
    if (std::abs(upper.f - lower.f) > 1) {
        throw std::invalid_argument("AtomicSystemSpec: |F_upper - F_lower| must be 0 or 1");
    }
    if (dipole == 0.0 || !std::isfinite(dipole)) {
        throw std::invalid_argument("AtomicSystemSpec: dipole strength must be nonzero and finite");
    }
    if (!std::isfinite(lower.energy) || !std::isfinite(upper.energy)) {
        throw std::invalid_argument("AtomicSystemSpec: energies must be finite");
    }
    if (polarizations.empty()) {
        throw std::invalid_argument("AtomicSystemSpec: polarization set must be nonempty");
    }
    std::set<Polarization> seen(polarizations.begin(), polarizations.end());
    if (seen.size() != polarizations.size()) {
        throw std::invalid_argument("AtomicSystemSpec: duplicate polarization");
    }
}

HamiltonianSet build_hamiltonians(const AtomicSystemSpec& spec) {
    spec.validate();
    const int f_lo = spec.lower.f;
    const int f_up = spec.upper.f;
    const int n_lo = 2 * f_lo + 1;
    const int n_up = 2 * f_up + 1;
    const int n = n_lo + n_up;

    HamiltonianSet hset;
    hset.dim = n;
    hset.h0 = Matrix::Zero(n, n);
    for (int i = 0; i < n_lo; ++i) {
        hset.h0(i, i) = spec.lower.energy;
        hset.state_labels.push_back(StateLabel{0, i - f_lo});
    }
    for (int i = 0; i < n_up; ++i) {
        hset.h0(n_lo + i, n_lo + i) = spec.upper.energy;
        hset.state_labels.push_back(StateLabel{1, i - f_up});
    }

    for (Polarization p : spec.polarizations) {
        Matrix h = Matrix::Zero(n, n);
        for (int m = -f_lo; m <= f_lo; ++m) {
            const int mu = m + delta_m(p);
            if (mu < -f_up || mu > f_up) continue;
            if (spec.alkali_m0_suppressed && p == Polarization::Pi &&
                f_lo == f_up && m == 0) {
                continue;
            }
            const int row = m + f_lo;
            const int col = n_lo + mu + f_up;
            h(row, col) = spec.dipole;
            h(col, row) = spec.dipole;
        }
        if (h.cwiseAbs().maxCoeff() > 0.0) {
            hset.controls.push_back(Control{std::string(polarization_name(p)), std::move(h)});
        } else {
            hset.dropped.push_back(p);
        }
    }

    if (hset.controls.empty()) {
        throw std::invalid_argument(
            "build_hamiltonians: no polarization couples any sublevel pair");
    }
    return hset;
}

CouplingGraph coupling_graph(const HamiltonianSet& hset) {
    CouplingGraph graph;
    graph.num_vertices = hset.dim;
    std::set<std::pair<int, int>> edges;
    for (const Control& c : hset.controls) {
        for (int i = 0; i < hset.dim; ++i) {
            for (int j = i + 1; j < hset.dim; ++j) {
                if (std::abs(c.matrix(i, j)) > kEdgeTol) edges.emplace(i, j);
            }
        }
    }
    graph.edges.assign(edges.begin(), edges.end());
    return graph;
}

std::vector<std::vector<int>> connected_components(const CouplingGraph& graph) {
    std::vector<std::vector<int>> adjacency(graph.num_vertices);
    for (const auto& [i, j] : graph.edges) {
        adjacency[i].push_back(j);
        adjacency[j].push_back(i);
    }
    std::vector<bool> seen(graph.num_vertices, false);
    std::vector<std::vector<int>> components;
    for (int start = 0; start < graph.num_vertices; ++start) {
        if (seen[start]) continue;
        std::vector<int> component;
        std::vector<int> stack{start};
        seen[start] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            component.push_back(v);
            for (int w : adjacency[v]) {
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

std::vector<Subsystem> decompose(const HamiltonianSet& hset) {
    std::vector<Subsystem> out;
    for (std::vector<int>& indices : connected_components(coupling_graph(hset))) {
        const int k = static_cast<int>(indices.size());
        Subsystem sub;
        sub.trivial = (k == 1);
        sub.restricted.dim = k;
        sub.restricted.h0 = Matrix::Zero(k, k);
        for (int a = 0; a < k; ++a) {
            for (int b = 0; b < k; ++b) {
                sub.restricted.h0(a, b) = hset.h0(indices[a], indices[b]);
            }
        }
        for (const Control& c : hset.controls) {
            Matrix block(k, k);
            for (int a = 0; a < k; ++a) {
                for (int b = 0; b < k; ++b) {
                    block(a, b) = c.matrix(indices[a], indices[b]);
                }
            }
            if (block.cwiseAbs().maxCoeff() > kEdgeTol) {
                sub.restricted.controls.push_back(Control{c.label, std::move(block)});
            }
        }
        if (!hset.state_labels.empty()) {
            for (int idx : indices) {
                sub.restricted.state_labels.push_back(hset.state_labels[idx]);
            }
        }
        sub.indices = std::move(indices);
        out.push_back(std::move(sub));
    }
    return out;
}

SystemReport analyze_system(const AtomicSystemSpec& spec) {
    return analyze_set(build_hamiltonians(spec), spec);
}

SystemReport analyze_hamiltonians(const Matrix& h0, const std::vector<Matrix>& controls) {
    if (controls.empty()) {
        throw std::invalid_argument("analyze_hamiltonians: at least one control required");
    }
    HamiltonianSet hset;
    hset.dim = static_cast<int>(h0.rows());
    hset.h0 = h0;
    for (std::size_t m = 0; m < controls.size(); ++m) {
        hset.controls.push_back(Control{"H" + std::to_string(m + 1), controls[m]});
    }
    return analyze_set(std::move(hset), std::nullopt);
}

}  // namespace dynlie
