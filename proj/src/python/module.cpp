#include "ainf/cohomology.hpp"
#include "ainf/hochschild.hpp"
#include "ainf/parse.hpp"
#include "ainf/structure.hpp"
#include "ainf/suites.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace ainf;

namespace {

const LinearOperator& require_delta(const GradedAlgebra& alg) {
    if (!alg.delta()) throw std::invalid_argument("algebra carries no delta");
    return *alg.delta();
}

py::dict element_dict(const Element& e) {
    py::dict out;
    for (const auto& [i, c] : e.coeffs())
        out[py::str(e.basis()->name(i))] = format_scalar(c);
    return out;
}

py::dict op_table(const MultiOp& op) {
    py::dict out;
    for (const auto& [idx, v] : op.table()) {
        py::tuple key(idx.size());
        for (size_t k = 0; k < idx.size(); ++k) key[k] = op.basis()->name(idx[k]);
        out[key] = element_dict(v);
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact A-infinity verification engine";

    py::class_<GradedAlgebra>(m, "Algebra")
        .def_property_readonly("name", [](const GradedAlgebra& a) { return a.name; })
        .def_property_readonly("basis",
                               [](const GradedAlgebra& a) {
                                   py::list out;
                                   for (const auto& e : a.basis()->entries())
                                       out.append(py::make_tuple(e.name, e.degree));
                                   return out;
                               })
        .def_property_readonly("has_delta",
                               [](const GradedAlgebra& a) { return a.delta().has_value(); })
        .def_property_readonly("has_pairing",
                               [](const GradedAlgebra& a) { return a.has_pairing(); })
        .def("validate",
             [](const GradedAlgebra& a) {
                 py::list out;
                 for (const auto& v : validate_algebra(a).violations)
                     out.append(py::make_tuple(v.rule, v.witness));
                 return out;
             })
        .def("serialize", [](const GradedAlgebra& a) { return serialize_algebra(a); })
        .def("__repr__", [](const GradedAlgebra& a) {
            return "<ainf.Algebra '" + (a.name.empty() ? std::string("unnamed") : a.name) +
                   "' dim " + std::to_string(a.basis()->size()) + ">";
        });

    m.def("load_algebra", &load_algebra_file, py::arg("path"));
    m.def(
        "parse_algebra", [](const std::string& text) { return parse_algebra(text); },
        py::arg("text"));

    m.def(
        "koszul_sign",
        [](long long op_degree, const std::vector<int>& degrees) {
            return koszul_sign(op_degree, degrees);
        },
        py::arg("op_degree"), py::arg("passed_degrees"));

    m.def(
        "derived_op",
        [](const GradedAlgebra& alg, int n) {
            return op_table(derivation_defect_op(alg, require_delta(alg), n));
        },
        py::arg("algebra"), py::arg("n"),
        "table of the n-th operation measuring the non-derivation defect of delta");

    m.def(
        "stasheff_defect_max",
        [](const GradedAlgebra& alg, int n_max) -> py::tuple {
            AInfStructure s = derivation_defect_structure(alg, require_delta(alg), n_max);
            for (int n = 1; n <= n_max; ++n) {
                MultiOp defect = stasheff_defect(s, n);
                if (!defect.is_zero()) return py::make_tuple(n, op_table(defect));
            }
            return py::make_tuple(py::none(), py::dict());
        },
        py::arg("algebra"), py::arg("n_max") = 6,
        "first arity with a nonzero Stasheff defect, or (None, {}) when clean");

    m.def(
        "assoc_vs_delta_square_max",
        [](const GradedAlgebra& alg, int n_max) {
            for (int n = 1; n <= n_max; ++n) {
                MultiOp diff = stasheff_defect_vs_delta_square(alg, require_delta(alg), n);
                if (!diff.is_zero()) return py::object(py::int_(n));
            }
            return py::object(py::none());
        },
        py::arg("algebra"), py::arg("n_max") = 5);

    m.def(
        "associative_order",
        [](const GradedAlgebra& alg, int cap) -> py::object {
            OrderResult r = ainf::associative_order(alg, require_delta(alg), cap);
            if (r.order) return py::int_(*r.order);
            return py::none();
        },
        py::arg("algebra"), py::arg("cap") = 6);

    m.def(
        "compat_holds",
        [](const GradedAlgebra& alg) {
            return product_compatibility_check(alg, require_delta(alg)).ok();
        },
        py::arg("algebra"));

    m.def(
        "delta_cohomology",
        [](const GradedAlgebra& alg) {
            py::list out;
            CohomologyBasis coh = ainf::delta_cohomology(alg);
            for (const auto& c : coh.classes())
                out.append(py::make_tuple(c.degree, element_dict(c.representative)));
            return out;
        },
        py::arg("algebra"));

    m.def(
        "induced_on_cohomology_zero",
        [](const GradedAlgebra& alg, int n_max) {
            return induced_on_cohomology(alg, require_delta(alg), n_max).report.ok();
        },
        py::arg("algebra"), py::arg("n_max") = 4);

    m.def(
        "hochschild_dims",
        [](const GradedAlgebra& alg, int n_max) {
            FrobeniusData fd = frobenius_validate(alg);
            return hh_cohomology(fd, n_max).dims;
        },
        py::arg("algebra"), py::arg("n_max") = 3);

    m.def(
        "run_suite",
        [](const std::string& command, const std::string& input, int max_arity, int max_word,
           int max_cochain, unsigned long seed) -> py::tuple {
            RunConfig cfg;
            cfg.command = command;
            cfg.input_path = input;
            cfg.max_arity = max_arity;
            cfg.max_word = max_word;
            cfg.max_cochain = max_cochain;
            cfg.seed = seed;
            cfg.report_path = "";
            Report report;
            std::string error;
            int rc = execute(cfg, report, &error);
            if (rc == 2) return py::make_tuple(rc, error);
            std::ostringstream text;
            emit_report(report, text);
            return py::make_tuple(rc, text.str());
        },
        py::arg("command"), py::arg("input"), py::arg("max_arity") = 6, py::arg("max_word") = 4,
        py::arg("max_cochain") = 4, py::arg("seed") = 0);
}
