// dynlie — command-line front end: classifies control systems from JSON specs,
// screens target unitaries against the classified algebra, evaluates
// expectation-value bounds, and emits the symplectic counterexample bundle.

#include <CLI11.hpp>

#include "dynlie/atomic_system.hpp"
#include "dynlie/json_io.hpp"
#include "dynlie/kinematics.hpp"
#include "dynlie/lie_algebra.hpp"
#include "dynlie/reachability.hpp"

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace dynlie;

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string fmt(const Cplx& z) {
    std::string out = fmt(z.real());
    if (z.imag() != 0.0) {
        out += (z.imag() > 0 ? "+" : "") + fmt(z.imag()) + "i";
    }
    return out;
}

void print_matrix(const Matrix& m, const std::string& indent) {
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        std::cout << indent << "[";
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (j) std::cout << ", ";
            std::cout << fmt(m(i, j));
        }
        std::cout << "]\n";
    }
}

std::string type_name(AlgebraType type) {
    switch (type) {
        case AlgebraType::SuN: return "su(N)";
        case AlgebraType::SpHalfN: return "sp(N/2)";
        case AlgebraType::Other: return "other";
    }
    return "?";
}

void print_classification(const Classification& cls, const std::string& indent) {
    std::cout << indent << "dimension: " << cls.dimension << "\n"
              << indent << "algebra type: " << type_name(cls.algebra_type) << "\n"
              << indent << "identity component: "
              << (cls.has_identity_component ? "present" : "absent") << "\n"
              << indent << "degrees: completely="
              << (cls.degrees.completely ? "yes" : "no")
              << " density-matrix=" << (cls.degrees.density_matrix ? "yes" : "no")
              << " observable=" << (cls.degrees.observable ? "yes" : "no")
              << " pure-state=" << (cls.degrees.pure_state ? "yes" : "no") << "\n";
}

void print_report_text(const SystemReport& report) {
    if (report.spec) {
        const AtomicSystemSpec& spec = *report.spec;
        std::cout << "system: F=" << spec.lower.f << " -> F=" << spec.upper.f
                  << "  (E1=" << fmt(spec.lower.energy) << ", E2=" << fmt(spec.upper.energy)
                  << ", d=" << fmt(spec.dipole) << ")  polarizations:";
        for (Polarization p : spec.polarizations) std::cout << " " << polarization_name(p);
        if (spec.alkali_m0_suppressed) std::cout << "  [m=0 pi coupling suppressed]";
        std::cout << "\n";
    } else {
        std::cout << "system: explicit Hamiltonians\n";
    }
    std::cout << "global:\n";
    print_classification(report.global, "  ");
    if (report.global.symplectic) {
        std::cout << "symplectic form:\n";
        print_matrix(report.global.symplectic->j, "  ");
    }
    std::cout << "components: " << report.components.size() << "\n";
    for (const ComponentReport& comp : report.components) {
        std::cout << "  states {";
        for (std::size_t k = 0; k < comp.indices.size(); ++k) {
            if (k) std::cout << ", ";
            std::cout << comp.indices[k];
        }
        std::cout << "}" << (comp.trivial ? " (uncoupled)" : "") << "\n";
        if (!comp.trivial) print_classification(comp.classification, "    ");
    }
    for (const std::string& warning : report.warnings) {
        std::cout << "warning: " << warning << "\n";
    }
    std::cout << "summary: " << report.summary << "\n";
}

int run_analyze(const std::string& spec_path, const std::string& raw_path,
                const std::string& format) {
    SystemReport report;
    if (!raw_path.empty()) {
        const std::vector<Matrix> hams = hamiltonian_list_from_json(read_text_file(raw_path));
        report = analyze_hamiltonians(hams.front(),
                                      std::vector<Matrix>(hams.begin() + 1, hams.end()));
    } else {
        report = analyze_system(spec_from_json(read_text_file(spec_path)));
    }
    if (format == "json") {
        std::cout << report_to_json(report) << "\n";
    } else {
        print_report_text(report);
    }
    return 0;
}

int run_check_unitary(const std::string& spec_path, const std::string& unitary_path,
                      bool strict) {
    const AtomicSystemSpec spec = spec_from_json(read_text_file(spec_path));
    const HamiltonianSet hset = build_hamiltonians(spec);
    const Matrix u_raw = matrix_from_json(read_text_file(unitary_path));
    if (u_raw.rows() != hset.dim) {
        std::cerr << "error: unitary is " << u_raw.rows() << "x" << u_raw.cols()
                  << " but the system has dimension " << hset.dim << "\n";
        return 2;
    }
    const TargetUnitary target = TargetUnitary::from_matrix(
        u_raw, strict ? PhaseMode::Strict : PhaseMode::Projective);

    std::vector<Matrix> hams{hset.h0};
    for (const Control& c : hset.controls) hams.push_back(c.matrix);
    const Classification cls = classify(GeneratorSet::from_hamiltonians(hams));

    const ReachabilityVerdict verdict = check_unitary(target, cls, hset);
    if (verdict.forbidden) {
        std::cout << "verdict: forbidden (" << forbidden_reason_name(*verdict.reason)
                  << ")\nwitness: " << fmt(verdict.witness) << "\ndetail: " << verdict.detail
                  << "\n";
        return 1;
    }
    std::cout << "verdict: necessary-conditions-pass\ndetail: " << verdict.detail << "\n";
    return 0;
}

int run_bounds(const std::string& rho_path, const std::string& observable_path,
               const std::string& format) {
    const DensityMatrix rho =
        validate_density(wrapped_matrix_from_json(read_text_file(rho_path), "density"));
    const Observable obs = Observable::from_matrix(
        wrapped_matrix_from_json(read_text_file(observable_path), "observable"));
    if (rho.matrix.rows() != obs.matrix.rows()) {
        std::cerr << "error: density matrix and observable dimensions differ\n";
        return 2;
    }
    const ExpectationBounds bounds = expectation_bounds(rho, obs);
    const double expectation = (rho.matrix * obs.matrix).trace().real();
    const ExtremalStates extremes = extremal_states(rho, obs);
    if (format == "json") {
        std::cout << bounds_report_to_json(bounds, expectation, extremes) << "\n";
    } else {
        std::cout << "lo: " << fmt(bounds.lo) << "\nhi: " << fmt(bounds.hi)
                  << "\nexpectation: " << fmt(expectation) << "\n";
    }
    return 0;
}

int run_counterexample(int ell, const std::vector<double>& weights) {
    const SpCounterexample bundle = sp_counterexample(ell, weights);

    CounterexampleChecks checks;
    checks.kinematically_equivalent = kinematically_equivalent(bundle.rho0, bundle.rho1);
    const Matrix j = standard_symplectic_form(ell);
    const Cplx imag(0.0, 1.0);
    checks.x_form_defect =
        ((imag * bundle.x).transpose() * j + j * (imag * bundle.x)).norm();
    checks.y_form_defect =
        ((imag * bundle.y).transpose() * j + j * (imag * bundle.y)).norm();

    std::cout << counterexample_to_json(bundle, checks) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-of-controllability analysis for finite quantum control systems"};
    app.require_subcommand(1);

    std::string spec_path, raw_path, unitary_path, rho_path, observable_path;
    std::string analyze_format = "text", bounds_format = "text";
    bool strict = false;
    int ell = 2;
    std::vector<double> weights;

    CLI::App* analyze = app.add_subcommand(
        "analyze", "classify a system and report its degree of controllability");
    analyze->add_option("spec", spec_path, "atomic system spec (JSON)");
    analyze->add_option("--raw-hamiltonians", raw_path,
                        "explicit {\"hamiltonians\": [drift, controls...]} file");
    analyze->add_option("--format", analyze_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* check = app.add_subcommand(
        "check-unitary", "test a target unitary against the system's necessary conditions");
    check->add_option("spec", spec_path, "atomic system spec (JSON)")->required();
    check->add_option("unitary", unitary_path, "target unitary (matrix JSON)")->required();
    check->add_flag("--strict", strict, "treat the global phase as significant");

    CLI::App* bounds = app.add_subcommand(
        "bounds", "kinematically admissible expectation-value range of an observable");
    bounds->add_option("rho", rho_path, "density matrix file (kind: density)")->required();
    bounds->add_option("observable", observable_path, "observable file (kind: observable)")
        ->required();
    bounds->add_option("--format", bounds_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    CLI::App* counter = app.add_subcommand(
        "counterexample",
        "kinematically equivalent states that symplectic dynamics cannot connect");
    counter->add_option("--ell", ell, "half-dimension l (system size 2l)")->required();
    counter->add_option("--weights", weights, "l weights, 0 < w1 < ... < wl < 1/(2l)")
        ->required()
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (analyze->parsed()) {
            if (spec_path.empty() == raw_path.empty()) {
                std::cerr << "error: provide either a spec file or --raw-hamiltonians\n";
                return 2;
            }
            return run_analyze(spec_path, raw_path, analyze_format);
        }
        if (check->parsed()) return run_check_unitary(spec_path, unitary_path, strict);
        if (bounds->parsed()) return run_bounds(rho_path, observable_path, bounds_format);
        if (counter->parsed()) return run_counterexample(ell, weights);
    } catch (const ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const DensityValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    }
    return 2;
}
