#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conerank/cli.hpp"
#include "conerank/complex_io.hpp"
#include "conerank/cone_generators.hpp"
#include "conerank/error.hpp"
#include "conerank/hochster.hpp"
#include "conerank/poly_text.hpp"
#include "conerank/sr_ideal.hpp"

namespace py = pybind11;
using namespace conerank;

namespace {

using NamedFacets = std::vector<std::vector<std::string>>;

NamedFacets named_facets(const SimplicialComplex& c) {
    NamedFacets out;
    for (auto f : c.facets()) out.push_back(c.face_names(f));
    return out;
}

CaseChoice parse_case(const std::string& s) {
    if (s == "auto") return CaseChoice::automatic;
    if (s == "1") return CaseChoice::case1;
    if (s == "21") return CaseChoice::case21;
    if (s == "22") return CaseChoice::case22;
    throw InvalidInput("case must be one of auto, 1, 21, 22");
}

py::dict construct(const SimplicialComplex& complex, const std::vector<std::string>& face,
                   const std::string& new_vertex, std::uint64_t characteristic, const std::string& case_choice,
                   const std::optional<std::vector<std::string>>& witness, bool prefer_roots,
                   std::size_t max_pairs) {
    const auto field = Field::from_characteristic(characteristic);
    std::optional<std::vector<Polynomial>> parsed;
    if (witness) {
        parsed.emplace();
        for (const auto& text : *witness) parsed->push_back(parse_polynomial(text, complex.names(), field));
    }
    ConeOptions options;
    options.case_choice = parse_case(case_choice);
    options.prefer_roots = prefer_roots;
    options.throw_on_failure = false;
    options.groebner.max_pairs = max_pairs;
    RadicalPresentation p;
    {
        py::gil_scoped_release release;
        p = cone_generators(complex, complex.face_from_names(face), new_vertex, parsed, field, options);
    }
    std::vector<std::string> polys;
    for (const auto& f : p.polynomials) polys.push_back(format_polynomial(f, p.names));
    std::vector<std::string> omegas;
    for (const auto& w : p.omegas) omegas.push_back(w.to_string());
    py::dict d;
    d["case"] = to_string(p.kind);
    d["field"] = p.field.to_string();
    d["h"] = p.h;
    d["s"] = p.s;
    d["t"] = p.t;
    d["ell"] = p.ell ? py::cast(*p.ell) : py::none();
    d["omega"] = omegas;
    d["vertices"] = p.names;
    d["polynomials"] = polys;
    d["passed"] = p.verification->pass();
    d["inconclusive"] = p.verification->inconclusive;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Stanley-Reisner ideals of cones: invariants and up-to-radical generators";

    auto& base = py::register_exception<Error>(m, "ConerankError", PyExc_RuntimeError);
    py::register_exception<InvalidInput>(m, "InvalidInput", base.ptr());
    py::register_exception<Undefined>(m, "Undefined", base.ptr());
    py::register_exception<VerificationFailure>(m, "VerificationFailure", base.ptr());
    py::register_exception<Inconclusive>(m, "Inconclusive", base.ptr());

    py::class_<SimplicialComplex>(m, "Complex")
        .def(py::init([](std::vector<std::string> vertices, const NamedFacets& facets) {
                 return SimplicialComplex::from_named_facets(facets, std::move(vertices));
             }),
             py::arg("vertices"), py::arg("facets"))
        .def_static("from_json", &parse_complex, py::arg("text"))
        .def_static("load", &load_complex, py::arg("path"))
        .def_static("simplex", py::overload_cast<std::size_t>(&elementary_simplex), py::arg("n"))
        .def_static("boundary", py::overload_cast<std::size_t>(&boundary_complex), py::arg("n"))
        .def("to_json", &format_complex)
        .def_property_readonly("vertices", &SimplicialComplex::names)
        .def_property_readonly("facets", &named_facets)
        .def_property_readonly("dimension", &SimplicialComplex::dimension)
        .def("is_pure", &SimplicialComplex::is_pure)
        .def("is_simplex", &SimplicialComplex::is_simplex)
        .def("subfacets", [](const SimplicialComplex& c) {
            NamedFacets out;
            for (auto f : c.subfacets()) out.push_back(c.face_names(f));
            return out;
        })
        .def("__eq__", [](const SimplicialComplex& a, const SimplicialComplex& b) { return a == b; })
        .def("__repr__", [](const SimplicialComplex& c) { 
            auto text = format_complex(c);
            text.pop_back();
            return "Complex(" + text + ")";
        });

    m.def(
        "cone_union",
        [](const SimplicialComplex& c, const std::vector<std::string>& face, const std::string& vertex,
           std::size_t position) { return cone_union(c, c.face_from_names(face), vertex, position); },
        py::arg("complex"), py::arg("face"), py::arg("vertex") = "x0", py::arg("position") = 0);

    m.def("height", &height, py::arg("complex"));
    m.def(
        "graded_betti",
        [](const SimplicialComplex& c, std::uint64_t characteristic) {
            return graded_betti(c, Field::from_characteristic(characteristic)).entries();
        },
        py::arg("complex"), py::arg("char") = 0, "Nonzero β_{i,j} keyed by (i, j).");
    m.def(
        "proj_dim",
        [](const SimplicialComplex& c, std::uint64_t ch) { return proj_dim(c, Field::from_characteristic(ch)); },
        py::arg("complex"), py::arg("char") = 0);
    m.def(
        "regularity",
        [](const SimplicialComplex& c, std::uint64_t ch) { return regularity(c, Field::from_characteristic(ch)); },
        py::arg("complex"), py::arg("char") = 0);
    m.def(
        "has_2_linear_resolution",
        [](const SimplicialComplex& c, std::uint64_t ch) {
            return has_2_linear_resolution(c, Field::from_characteristic(ch));
        },
        py::arg("complex"), py::arg("char") = 0);
    m.def("is_generalized_tree", &is_generalized_tree, py::arg("complex"));
    m.def("is_d_tree", &is_d_tree, py::arg("complex"));
    m.def(
        "lemma3_r",
        [](const SimplicialComplex& c) -> std::optional<std::size_t> {
            if (auto shape = recognize_lemma3_shape(c)) return shape->r;
            return std::nullopt;
        },
        py::arg("complex"), "r of the ∂Δ(r)*Δ(d-r+2) core, or None.");

    m.def("construct", &construct, py::arg("complex"), py::arg("face"), py::arg("vertex") = "x0",
          py::arg("char") = 0, py::arg("case") = "auto", py::arg("witness") = std::nullopt,
          py::arg("prefer_roots") = false, py::arg("max_pairs") = GroebnerOptions{}.max_pairs,
          "Up-to-radical generators of the cone's ideal, verified.");

    m.def(
        "verify",
        [](const std::vector<std::string>& polynomials, const SimplicialComplex& c, std::uint64_t ch) {
            const auto field = Field::from_characteristic(ch);
            std::vector<Polynomial> parsed;
            for (const auto& text : polynomials) parsed.push_back(parse_polynomial(text, c.names(), field));
            py::gil_scoped_release release;
            return verify_radical_presentation(parsed, stanley_reisner_ideal(c)).pass();
        },
        py::arg("polynomials"), py::arg("complex"), py::arg("char") = 0,
        "True iff the radical of the polynomials is the complex's ideal.");

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "conerank");
            std::ostringstream out, err;
            const int code = run_cli(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line; returns (exit code, stdout, stderr).");
}
