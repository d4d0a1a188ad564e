#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bpba/bpba.hpp"

namespace py = pybind11;
using namespace bpba;

namespace {

LatticeSpec spec_of(const std::string& text) { return spec_from_json(Json::parse(text)); }

Rational rational_of(const std::string& text) { return Rational::parse(text); }

std::vector<std::string> strings(const std::vector<Rational>& xs) {
    std::vector<std::string> out;
    out.reserve(xs.size());
    for (const auto& x : xs) {
        out.push_back(x.str());
    }
    return out;
}

std::vector<Rational> z_values(const std::string& method, const LatticeSpec& spec,
                               const std::vector<ExternalConfig>& configs) {
    if (method == "direct") {
        return z_direct_all(spec, configs);
    }
    if (method == "aba") {
        return z_aba_all(spec, configs);
    }
    if (method == "cba") {
        return z_cba_all(spec, configs);
    }
    throw ParseError("unknown method '" + method + "'");
}

QuantumState state_by(const std::string& route, const LatticeSpec& spec) {
    if (route == "direct") {
        return build_invariant(spec);
    }
    if (route == "aba") {
        return bethe_state(spec, canonical_bethe_roots(spec));
    }
    if (route == "cba") {
        return cba_state(spec, canonical_bethe_roots(spec));
    }
    throw ParseError("unknown route '" + route + "'");
}

} // namespace

PYBIND11_MODULE(_bpba, m) {
    m.doc() = "Exact partition functions of Baxter lattices with a reflecting boundary.";

    auto error = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", error.ptr());
    py::register_exception<InvalidSpec>(m, "InvalidSpec", error.ptr());
    py::register_exception<PoleError>(m, "PoleError", error.ptr());
    py::register_exception<DegenerateError>(m, "DegenerateError", error.ptr());
    py::register_exception<DimensionError>(m, "DimensionError", error.ptr());

    m.def("validate", [](const std::string& spec) {
        const ValidationReport r = validate_spec(spec_of(spec));
        return py::make_tuple(r.ok, r.violations);
    });

    m.def(
        "partition_functions",
        [](const std::string& spec_text, const std::string& configs_text, const std::string& method) {
            const LatticeSpec spec = spec_of(spec_text);
            require_valid(spec);
            std::vector<ExternalConfig> configs;
            for (const auto& c : Json::parse(configs_text)) {
                configs.push_back(config_from_json(c));
                check_config(spec, configs.back());
            }
            return strings(z_values(method, spec, configs));
        },
        py::arg("spec"), py::arg("configs"), py::arg("method"));

    m.def("all_configs", [](std::size_t n) {
        Json out = Json::array();
        for (const auto& c : all_configs(n)) {
            out.push_back(to_json(c));
        }
        return out.dump();
    });

    m.def("bethe_roots", [](const std::string& spec) { return strings(canonical_bethe_roots(spec_of(spec)).roots); });

    m.def("q_function", [](const std::string& spec, const std::string& z) {
        return q_function(spec_of(spec), rational_of(z)).str();
    });

    m.def("invariant_state", [](const std::string& spec, const std::string& route) {
        return to_json(state_by(route, spec_of(spec))).dump();
    });

    m.def("is_invariant", [](const std::string& spec, const std::string& state, const std::string& z) {
        return check_invariance(spec_of(spec), state_from_json(Json::parse(state)), rational_of(z));
    });

    m.def("plan_moves", [](const std::string& spec) { return to_json(plan_moves(spec_of(spec))).dump(); });

    m.def(
        "verify",
        [](const std::string& suite, std::size_t draws, std::uint64_t seed) {
            py::list out;
            for (const auto& r : run_suites(suite, draws, seed)) {
                py::dict d;
                d["name"] = r.name;
                d["draws"] = r.draws;
                d["checks"] = r.checks;
                d["redraws"] = r.redraws;
                d["failures"] = r.failures;
                out.append(d);
            }
            return out;
        },
        py::arg("suite") = "all", py::arg("draws") = 20, py::arg("seed") = 1);

    m.def("figure1", [] { return to_json(figure1_fixture()).dump(); });
    m.def("init8", [] { return to_json(init8_fixture()).dump(); });
}
