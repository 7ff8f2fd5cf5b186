#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qspectra/explorer.hpp"
#include "qspectra/graphs.hpp"
#include "qspectra/io.hpp"
#include "qspectra/report.hpp"
#include "qspectra/sensitivity.hpp"

namespace py = pybind11;
using namespace qspectra;

namespace {

std::vector<std::complex<double>> spectrum_values(const DiscreteFunction& f) {
    const Spectrum s = forward(f);
    std::vector<std::complex<double>> out(s.size());
    for (std::size_t z = 0; z < s.size(); ++z) out[z] = s.is_zero(z) ? 0.0 : s.value(z);
    return out;
}

py::dict profile_dict(const DiscreteFunction& f, const std::vector<int>& ms) {
    const DegreeProfile p = degree_profile(forward(f), ms);
    py::dict d;
    d["deg0"] = p.deg0;
    d["deg1"] = p.deg1;
    d["deg2"] = p.deg2;
    for (const auto& [m, v] : p.generic) d[py::str("deg" + std::to_string(m))] = v;
    return d;
}

std::string verify_json(int q, int n, const std::string& kind, const std::vector<std::string>& laws, bool exhaustive,
                        std::uint64_t samples, std::uint64_t seed, int threads, std::size_t top) {
    Corpus corpus{DomainSpec(q, n), parse_kind(kind), exhaustive, samples, seed};
    SweepOptions opt;
    opt.threads = threads;
    opt.top_k = top;
    if (laws.empty()) {
        for (Law law : all_laws()) {
            if (law_applicable(law, corpus.kind, q)) opt.laws.push_back(law);
        }
    } else {
        for (const auto& l : laws) opt.laws.push_back(parse_law(l));
    }
    SweepSummary summary;
    {
        py::gil_scoped_release release;
        summary = sweep(corpus, opt);
    }
    return dump_json(sweep_report(summary));
}

DiscreteFunction generate(const std::string& family, int q, int n, int m, int index, std::int64_t value,
                          const std::string& kind, const std::vector<int>& z) {
    if (family == "fm") return gen_fm(m, n);
    if (family == "fm_pm1") return gen_fm_pm1(m, n);
    FamilyParams p;
    p.index = index;
    p.value = value;
    p.kind = parse_kind(kind);
    p.z = z;
    return gen_named(family, DomainSpec(q, family == "character" ? static_cast<int>(z.size()) : n), p);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral analysis of functions on Z_q^n";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<KindError>(m, "KindError", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<InfeasibleCorpusError>(m, "InfeasibleCorpusError", PyExc_ValueError);

    py::class_<DiscreteFunction>(m, "Function")
        .def_static(
            "from_codes",
            [](int q, int n, const std::string& kind, std::vector<std::int64_t> codes) {
                return DiscreteFunction::from_codes(DomainSpec(q, n), parse_kind(kind), std::move(codes));
            },
            py::arg("q"), py::arg("n"), py::arg("kind"), py::arg("codes"))
        .def_static(
            "from_complex",
            [](int q, int n, std::vector<std::complex<double>> values) {
                return DiscreteFunction::from_complex(DomainSpec(q, n), std::move(values));
            },
            py::arg("q"), py::arg("n"), py::arg("values"))
        .def_property_readonly("q", [](const DiscreteFunction& f) { return f.spec().q(); })
        .def_property_readonly("n", [](const DiscreteFunction& f) { return f.spec().n(); })
        .def_property_readonly("kind", [](const DiscreteFunction& f) { return std::string(kind_token(f.kind())); })
        .def_property_readonly("codes",
                               [](const DiscreteFunction& f) {
                                   return std::vector<std::int64_t>(f.codes().begin(), f.codes().end());
                               })
        .def("values",
             [](const DiscreteFunction& f) {
                 std::vector<std::complex<double>> v(f.size());
                 for (std::size_t x = 0; x < f.size(); ++x) v[x] = f.value(x);
                 return v;
             })
        .def("__len__", &DiscreteFunction::size)
        .def("__eq__", [](const DiscreteFunction& a, const DiscreteFunction& b) { return a == b; })
        .def("__repr__", [](const DiscreteFunction& f) {
            return "<Function q=" + std::to_string(f.spec().q()) + " n=" + std::to_string(f.spec().n()) +
                   " kind=" + std::string(kind_token(f.kind())) + ">";
        });

    m.def("parse_truth_table", [](const std::string& text) { return parse_truth_table(text); }, py::arg("text"));
    m.def("format_truth_table", &format_truth_table, py::arg("f"));

    m.def("forward", &spectrum_values, py::arg("f"), "Unnormalized W_f(z) in flat order; exact zeros are 0.");
    m.def("inverse_roundtrip", [](const DiscreteFunction& f) { return inverse(forward(f)); }, py::arg("f"));
    m.def("spectrum_listing", &spectrum_listing, py::arg("f"));
    m.def("degrees", &profile_dict, py::arg("f"), py::arg("ms") = std::vector<int>{});

    m.def("relevant_variables", &relevant_variables, py::arg("f"), "0-based indices of the relevant coordinates.");
    m.def(
        "mixed_edges", [](const DiscreteFunction& f, const std::string& graph) { return mixed_edges(f, parse_graph(graph)).total; },
        py::arg("f"), py::arg("graph") = "cycle_power");
    m.def(
        "eigenvalue",
        [](const std::string& graph, std::vector<int> z, int q) {
            const DomainSpec spec(q, static_cast<int>(z.size()));
            return eigenvalue(parse_graph(graph), flat_index(z, spec), spec);
        },
        py::arg("graph"), py::arg("z"), py::arg("q"));

    m.def(
        "analyze_json", [](const DiscreteFunction& f) { return dump_json(analyze(f).document); }, py::arg("f"));
    m.def("verify_json", &verify_json, py::arg("q"), py::arg("n"), py::arg("kind"), py::arg("laws") = std::vector<std::string>{},
          py::arg("exhaustive") = true, py::arg("samples") = 0, py::arg("seed") = 0, py::arg("threads") = 1,
          py::arg("top") = 10);
    m.def("generate", &generate, py::arg("family"), py::arg("q") = 2, py::arg("n") = 1, py::arg("m") = 1,
          py::arg("index") = 0, py::arg("value") = 1, py::arg("kind") = "pm1", py::arg("z") = std::vector<int>{});
    m.attr("schema_version") = kSchemaVersion;
}
