#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lassokit/cli.hpp"
#include "lassokit/errors.hpp"
#include "lassokit/extraction.hpp"
#include "lassokit/lasso_automaton.hpp"
#include "lassokit/omega.hpp"

namespace py = pybind11;
using namespace lassokit;

namespace {

Alphabet sigma_for(const std::optional<std::string>& alphabet, const std::string& text) {
    return alphabet ? Alphabet(*alphabet) : Alphabet::infer(text);
}

py::object lasso_pair(const std::optional<std::pair<Lasso, Lasso>>& p) {
    if (!p) return py::none();
    return py::make_tuple(p->first, p->second);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Lasso automata, rational lasso expressions and omega-expressions";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<SideConditionError>(m, "SideConditionError", PyExc_ValueError);
    py::register_exception<FormatError>(m, "FormatError", PyExc_ValueError);
    py::register_exception<StateCapError>(m, "StateCapError", PyExc_RuntimeError);
    py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch", PyExc_ValueError);
    py::register_exception<CertificationError>(m, "CertificationError", PyExc_RuntimeError);
    py::register_exception<PreconditionError>(m, "PreconditionError", PyExc_ValueError);

    py::class_<Lasso>(m, "Lasso")
        .def(py::init<Word, Word>(), py::arg("spoke"), py::arg("loop"))
        .def_static("parse", &Lasso::parse)
        .def_property_readonly("spoke", &Lasso::spoke)
        .def_property_readonly("loop", &Lasso::loop)
        .def("__str__", &Lasso::to_string)
        .def("__repr__", [](const Lasso& l) { return "Lasso('" + l.to_string() + "')"; })
        .def("__eq__", [](const Lasso& a, const Lasso& b) { return a == b; })
        .def("__hash__", [](const Lasso& l) { return py::hash(py::str(l.to_string())); });

    m.def("normal_form", &normal_form);
    m.def("gamma_equiv", &gamma_equiv);
    m.def("up_equal", &up_equal);
    m.def("expansions", &expansions, py::arg("lasso"), py::arg("k_max") = 2);

    py::class_<RatExpr>(m, "RatExpr")
        .def_property_readonly("ewp", &RatExpr::ewp)
        .def("__str__", &RatExpr::to_string)
        .def("__eq__", [](const RatExpr& a, const RatExpr& b) { return a == b; });
    py::class_<LassoExpr>(m, "LassoExpr").def("__str__", &LassoExpr::to_string);
    py::class_<OmegaExpr>(m, "OmegaExpr").def("__str__", &OmegaExpr::to_string);
    py::class_<DisjunctiveForm>(m, "DisjunctiveForm")
        .def("__str__", &DisjunctiveForm::to_string)
        .def("__len__", &DisjunctiveForm::size)
        .def("pairs", [](const DisjunctiveForm& f) {
            std::vector<std::pair<std::string, std::string>> out;
            for (const auto& p : f.pairs()) out.emplace_back(p.spoke.to_string(), p.loop.to_string());
            return out;
        })
        .def("__contains__", [](const DisjunctiveForm& f, const Lasso& l) { return member_lasso_naive(f, l); });

    m.def(
        "parse_rexp", [](const std::string& t, std::optional<std::string> a) { return parse_rexp(t, sigma_for(a, t)); },
        py::arg("text"), py::arg("alphabet") = py::none());
    m.def(
        "parse_lexp", [](const std::string& t, std::optional<std::string> a) { return parse_lexp(t, sigma_for(a, t)); },
        py::arg("text"), py::arg("alphabet") = py::none());
    m.def(
        "parse_oexp", [](const std::string& t, std::optional<std::string> a) { return parse_oexp(t, sigma_for(a, t)); },
        py::arg("text"), py::arg("alphabet") = py::none());

    m.def("member", [](const RatExpr& t, const std::string& w) { return member_naive(t, w); });
    m.def("member", [](const LassoExpr& x, const Lasso& l) { return member_lasso_naive(x, l); });
    m.def("member", [](const OmegaExpr& T, const Lasso& l) { return up_member(T, l); });
    m.def("normalize", &normalize_b);
    m.def("split", [](const RatExpr& t) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& p : split(t)) out.emplace_back(p.left.to_string(), p.right.to_string());
        return out;
    });
    m.def(
        "root", [](const RatExpr& t, const std::string& alphabet) {
            return dfa_to_expr(root(compile_dfa(t, Alphabet(alphabet))));
        },
        py::arg("expr"), py::arg("alphabet"));

    py::class_<LassoAutomaton>(m, "LassoAutomaton")
        .def_static("read", &read_automaton)
        .def("write", &write_automaton)
        .def("dot", &to_dot)
        .def("accepts", &accepts)
        .def_property_readonly("alphabet", [](const LassoAutomaton& A) { return A.alphabet().letters(); })
        .def_property_readonly("num_spoke", &LassoAutomaton::num_spoke)
        .def_property_readonly("num_loop", &LassoAutomaton::num_loop);

    m.def("disjunctive_form", &disjunctive_form);
    m.def(
        "compile_lasso", [](const LassoExpr& x, const std::string& a) { return compile_lasso(x, Alphabet(a)); },
        py::arg("expr"), py::arg("alphabet"));
    m.def("is_saturated", [](const LassoAutomaton& A) {
        auto r = is_saturated(A);
        return py::make_tuple(r.saturated, lasso_pair(r.counterexample));
    });
    m.def("equivalent", [](const LassoAutomaton& A, const LassoAutomaton& B) {
        auto r = equivalent_lasso(A, B);
        return py::make_tuple(r.equivalent, r.counterexample ? py::cast(*r.counterexample) : py::none());
    });
    m.def("extract_expr", &extract_expr);
    m.def("extract_omega_expr", &extract_omega_expr);
    m.def(
        "represent", [](const OmegaExpr& T, const std::string& a) { return represent(T, Alphabet(a)); },
        py::arg("expr"), py::arg("alphabet"));
    m.def(
        "omega_to_automaton",
        [](const OmegaExpr& T, const std::string& a) { return omega_to_omega_automaton(T, Alphabet(a)); },
        py::arg("expr"), py::arg("alphabet"));

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "lassokit");
        std::vector<const char*> argv;
        for (const auto& s : args) argv.push_back(s.c_str());
        std::ostringstream out, err;
        int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
