#include "dynlie/json_io.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace dynlie {

namespace {

using nlohmann::json;  // plain json: object keys iterate in sorted order

// ---- canonical serialization ----
// Floats are printed with %.17g so every double round-trips exactly and
// re-serializing parsed output reproduces it byte for byte.

std::string format_double(double v) {
    if (v == 0.0) return "0";  // never emit "-0"
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void dump_canonical(const json& value, std::string& out) {
    switch (value.type()) {
        case json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, element] : value.items()) {
                if (!first) out += ',';
                first = false;
                out += json(key).dump();
                out += ':';
                dump_canonical(element, out);
            }
            out += '}';
            break;
        }
        case json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < value.size(); ++i) {
                if (i) out += ',';
                dump_canonical(value[i], out);
            }
            out += ']';
            break;
        }
        case json::value_t::number_float:
            out += format_double(value.get<double>());
            break;
        default:
            out += value.dump();
            break;
    }
}

std::string canonical(const json& value) {
    std::string out;
    dump_canonical(value, out);
    return out;
}

json parse(const std::string& text) {
    json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (value.is_discarded()) {
        throw ParseError("malformed JSON");
    }
    return value;
}

void require_object(const json& value, const char* what) {
    if (!value.is_object()) {
        throw ParseError(std::string(what) + ": expected a JSON object");
    }
}

void require_fields(const json& object, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional, const char* what) {
    for (const char* field : required) {
        if (!object.contains(field)) {
            throw ParseError(std::string(what) + ": missing field '" + field + "'");
        }
    }
    for (const auto& [key, unused] : object.items()) {
        bool known = false;
        for (const char* field : required) known = known || key == field;
        for (const char* field : optional) known = known || key == field;
        if (!known) {
            throw ParseError(std::string(what) + ": unknown field '" + key + "'");
        }
    }
}

double number_of(const json& value, const char* what) {
    if (!value.is_number()) {
        throw ParseError(std::string(what) + ": expected a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
        throw ParseError(std::string(what) + ": value must be finite");
    }
    return v;
}

json matrix_json(const Matrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
        }
        entries.push_back(std::move(row));
    }
    return json{{"dim", m.rows()}, {"entries", std::move(entries)}};
}

Matrix matrix_of(const json& value) {
    require_object(value, "matrix");
    require_fields(value, {"dim", "entries"}, {}, "matrix");
    if (!value["dim"].is_number_integer() || value["dim"].get<long long>() < 1) {
        throw ParseError("matrix: 'dim' must be a positive integer");
    }
    const auto n = static_cast<Eigen::Index>(value["dim"].get<long long>());
    if (n > 4096) {
        throw ParseError("matrix: dimension unreasonably large");
    }
    const json& entries = value["entries"];
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != n) {
        throw ParseError("matrix: 'entries' must be an array of dim rows");
    }
    Matrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        const json& row = entries[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            throw ParseError("matrix: each row must have dim entries");
        }
        for (Eigen::Index j = 0; j < n; ++j) {
            const json& pair = row[static_cast<std::size_t>(j)];
            if (!pair.is_array() || pair.size() != 2) {
                throw ParseError("matrix: each entry must be a [re, im] pair");
            }
            m(i, j) = Cplx(number_of(pair[0], "matrix entry"),
                           number_of(pair[1], "matrix entry"));
        }
    }
    return m;
}

json spec_json(const AtomicSystemSpec& spec) {
    json pols = json::array();
    for (Polarization p : spec.polarizations) {
        pols.push_back(std::string(polarization_name(p)));
    }
    return json{
        {"lower", {{"F", spec.lower.f}, {"energy", spec.lower.energy}}},
        {"upper", {{"F", spec.upper.f}, {"energy", spec.upper.energy}}},
        {"dipole", spec.dipole},
        {"polarizations", std::move(pols)},
        {"alkali_m0_suppressed", spec.alkali_m0_suppressed},
    };
}

LevelSpec level_of(const json& value, const char* what) {
    require_object(value, what);
    require_fields(value, {"F", "energy"}, {}, what);
    if (!value["F"].is_number_integer() || value["F"].get<long long>() < 0) {
        throw ParseError(std::string(what) + ": 'F' must be a non-negative integer");
    }
    return LevelSpec{static_cast<int>(value["F"].get<long long>()),
                     number_of(value["energy"], what)};
}

json classification_json(const Classification& cls) {
    const char* type = "other";
    if (cls.algebra_type == AlgebraType::SuN) type = "su_n";
    if (cls.algebra_type == AlgebraType::SpHalfN) type = "sp_half_n";
    json out{
        {"algebra_type", type},
        {"dimension", cls.dimension},
        {"has_identity_component", cls.has_identity_component},
        {"degrees",
         {{"completely", cls.degrees.completely},
          {"density_matrix", cls.degrees.density_matrix},
          {"observable", cls.degrees.observable},
          {"pure_state", cls.degrees.pure_state}}},
    };
    out["symplectic_form"] = cls.symplectic ? matrix_json(cls.symplectic->j) : json(nullptr);
    return out;
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return canonical(matrix_json(m)); }

Matrix matrix_from_json(const std::string& text) { return matrix_of(parse(text)); }

std::string spec_to_json(const AtomicSystemSpec& spec) { return canonical(spec_json(spec)); }

AtomicSystemSpec spec_from_json(const std::string& text) {
    const json value = parse(text);
    require_object(value, "system spec");
    require_fields(value, {"lower", "upper", "dipole", "polarizations"},
                   {"alkali_m0_suppressed"}, "system spec");
    AtomicSystemSpec spec;
    spec.lower = level_of(value["lower"], "system spec 'lower'");
    spec.upper = level_of(value["upper"], "system spec 'upper'");
    spec.dipole = number_of(value["dipole"], "system spec 'dipole'");
    if (!value["polarizations"].is_array() || value["polarizations"].empty()) {
        throw ParseError("system spec: 'polarizations' must be a nonempty array");
    }
    for (const json& entry : value["polarizations"]) {
        if (!entry.is_string()) {
            throw ParseError("system spec: polarization entries must be strings");
        }
        const auto p = polarization_from_name(entry.get<std::string>());
        if (!p) {
            throw ParseError("system spec: unknown polarization '" +
                             entry.get<std::string>() + "' (expected pi, sigma+, sigma-)");
        }
        spec.polarizations.push_back(*p);
    }
    if (value.contains("alkali_m0_suppressed")) {
        if (!value["alkali_m0_suppressed"].is_boolean()) {
            throw ParseError("system spec: 'alkali_m0_suppressed' must be a boolean");
        }
        spec.alkali_m0_suppressed = value["alkali_m0_suppressed"].get<bool>();
    }
    try {
        spec.validate();
    } catch (const std::invalid_argument& err) {
        throw ParseError(std::string("system spec: ") + err.what());
    }
    return spec;
}

std::string wrapped_matrix_to_json(const Matrix& m, const std::string& kind) {
    return canonical(json{{"kind", kind}, {"matrix", matrix_json(m)}});
}

Matrix wrapped_matrix_from_json(const std::string& text, const std::string& expected_kind) {
    const json value = parse(text);
    require_object(value, "wrapped matrix");
    require_fields(value, {"kind", "matrix"}, {}, "wrapped matrix");
    if (!value["kind"].is_string() || value["kind"].get<std::string>() != expected_kind) {
        throw ParseError("wrapped matrix: expected kind '" + expected_kind + "'");
    }
    return matrix_of(value["matrix"]);
}

std::string schedule_to_json(const ControlSchedule& schedule) {
    json segments = json::array();
    for (const ScheduleSegment& seg : schedule.segments) {
        segments.push_back(json{{"dt", seg.duration}, {"f", seg.amplitudes}});
    }
    return canonical(json{{"segments", std::move(segments)}});
}

ControlSchedule schedule_from_json(const std::string& text) {
    const json value = parse(text);
    require_object(value, "schedule");
    require_fields(value, {"segments"}, {}, "schedule");
    if (!value["segments"].is_array()) {
        throw ParseError("schedule: 'segments' must be an array");
    }
    ControlSchedule schedule;
    for (const json& entry : value["segments"]) {
        require_object(entry, "schedule segment");
        require_fields(entry, {"dt", "f"}, {}, "schedule segment");
        ScheduleSegment seg;
        seg.duration = number_of(entry["dt"], "schedule segment 'dt'");
        if (seg.duration <= 0.0) {
            throw ParseError("schedule segment: 'dt' must be positive");
        }
        if (!entry["f"].is_array()) {
            throw ParseError("schedule segment: 'f' must be an array of amplitudes");
        }
        for (const json& amp : entry["f"]) {
            seg.amplitudes.push_back(number_of(amp, "schedule amplitude"));
        }
        schedule.segments.push_back(std::move(seg));
    }
    return schedule;
}

std::string hamiltonian_list_to_json(const std::vector<Matrix>& hamiltonians) {
    json list = json::array();
    for (const Matrix& h : hamiltonians) list.push_back(matrix_json(h));
    return canonical(json{{"hamiltonians", std::move(list)}});
}

std::vector<Matrix> hamiltonian_list_from_json(const std::string& text) {
    const json value = parse(text);
    require_object(value, "hamiltonian list");
    require_fields(value, {"hamiltonians"}, {}, "hamiltonian list");
    if (!value["hamiltonians"].is_array() || value["hamiltonians"].size() < 2) {
        throw ParseError("hamiltonian list: need the drift plus at least one control");
    }
    std::vector<Matrix> out;
    for (const json& entry : value["hamiltonians"]) out.push_back(matrix_of(entry));
    const auto n = out.front().rows();
    for (const Matrix& h : out) {
        if (h.rows() != n) {
            throw ParseError("hamiltonian list: all matrices must share one dimension");
        }
    }
    return out;
}

std::string report_to_json(const SystemReport& report) {
    json components = json::array();
    for (const ComponentReport& comp : report.components) {
        components.push_back(json{
            {"indices", comp.indices},
            {"trivial", comp.trivial},
            {"classification", classification_json(comp.classification)},
        });
    }
    json out{
        {"spec", report.spec ? spec_json(*report.spec) : json(nullptr)},
        {"global", classification_json(report.global)},
        {"components", std::move(components)},
        {"warnings", report.warnings},
        {"summary", report.summary},
    };
    return canonical(out);
}

std::string verdict_to_json(const ReachabilityVerdict& verdict) {
    json out{
        {"forbidden", verdict.forbidden},
        {"witness", verdict.witness},
        {"detail", verdict.detail},
    };
    out["reason"] = verdict.reason ? json(std::string(forbidden_reason_name(*verdict.reason)))
                                   : json(nullptr);
    return canonical(out);
}

std::string bounds_report_to_json(const ExpectationBounds& bounds, double trace,
                                  const ExtremalStates& extremes) {
    return canonical(json{
        {"lo", bounds.lo},
        {"hi", bounds.hi},
        {"expectation", trace},
        {"rho_minus", matrix_json(extremes.rho_minus.matrix)},
        {"rho_plus", matrix_json(extremes.rho_plus.matrix)},
    });
}

std::string counterexample_to_json(const SpCounterexample& bundle,
                                   const CounterexampleChecks& checks) {
    return canonical(json{
        {"rho0", matrix_json(bundle.rho0.matrix)},
        {"rho1", matrix_json(bundle.rho1.matrix)},
        {"x", matrix_json(bundle.x)},
        {"y", matrix_json(bundle.y)},
        {"checks",
         {{"kinematically_equivalent", checks.kinematically_equivalent},
          {"x_form_defect", checks.x_form_defect},
          {"y_form_defect", checks.y_form_defect}}},
    });
}

std::string canonicalize_json(const std::string& text) { return canonical(parse(text)); }

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace dynlie
