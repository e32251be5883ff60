#include "vfl/borel.hpp"
#include "vfl/errors.hpp"
#include "vfl/generator.hpp"
#include "vfl/parser.hpp"
#include "vfl/printer.hpp"
#include "vfl/props.hpp"
#include "vfl/qelim.hpp"
#include "vfl/semantics.hpp"
#include "vfl/signature.hpp"
#include "vfl/subst.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;

namespace pybind11::detail {

// Arbitrary-precision naturals present as plain Python ints.
template <>
struct type_caster<vfl::Nat> {
  public:
    PYBIND11_TYPE_CASTER(vfl::Nat, const_name("int"));

    bool load(handle src, bool) {
        if (!PyLong_Check(src.ptr())) return false;
        py::object as_str = py::str(src);
        std::string text = as_str.cast<std::string>();
        if (!text.empty() && text[0] == '-') throw py::value_error("naturals cannot be negative");
        value = vfl::Nat(text);
        return true;
    }

    static handle cast(const vfl::Nat& n, return_value_policy, handle) {
        return PyLong_FromString(vfl::to_decimal(n).c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace vfl;

// classify() reports rejection as a value; Python callers get an exception
// carrying the reason and the printed offending subformula.
struct NotUqfException : std::runtime_error {
    explicit NotUqfException(const NotUqf& bad)
        : std::runtime_error(bad.reason + " (at: " + print_formula(bad.offending) + ")") {}
};

py::object truth_to_py(Truth v) {
    switch (v) {
        case Truth::True: return py::bool_(true);
        case Truth::False: return py::bool_(false);
        case Truth::Unknown: return py::none();
    }
    return py::none();
}

SentenceKind kind_from_string(const std::string& kind) {
    if (kind == "sigma") return SentenceKind::Sigma;
    if (kind == "pi") return SentenceKind::Pi;
    throw py::value_error("kind must be 'sigma' or 'pi'");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "first-order logic with variadic function symbols and ellipsis terms";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BudgetExceeded>(m, "BudgetExceededError", PyExc_RuntimeError);
    py::register_exception<OutOfPrefix>(m, "OutOfPrefixError", PyExc_RuntimeError);
    py::register_exception<EvalError>(m, "EvalError", PyExc_RuntimeError);
    py::register_exception<NotUqfException>(m, "NotUqfError", PyExc_ValueError);

    py::class_<Signature>(m, "Signature")
        .def(py::init<>())
        .def("fixed_fn", &Signature::fixed_fn, py::arg("name"), py::arg("arity"),
             py::return_value_policy::reference_internal)
        .def("variadic_fn", &Signature::variadic_fn, py::arg("name"),
             py::return_value_policy::reference_internal)
        .def("nary_by_variadic_fn", &Signature::nary_by_variadic_fn, py::arg("name"),
             py::arg("prefix_arity"), py::return_value_policy::reference_internal)
        .def("predicate", &Signature::predicate, py::arg("name"), py::arg("arity"),
             py::return_value_policy::reference_internal)
        .def("named_constant", &Signature::named_constant, py::arg("name"),
             py::return_value_policy::reference_internal)
        .def("validate", &Signature::validate)
        .def("ok", &Signature::ok)
        .def("declares", &Signature::declares, py::arg("name"))
        .def_static("from_file", &Signature::from_file, py::arg("path"))
        .def("to_text", &Signature::to_text)
        .def("__eq__", [](const Signature& a, const Signature& b) { return a == b; })
        .def("__repr__",
             [](const Signature& s) { return "Signature(" + std::to_string(s.decls().size()) +
                                             " declarations)"; });

    m.def("std_signature", &std_signature);

    py::class_<Term>(m, "Term")
        .def_static("numeral", [](const Nat& n) { return Term::numeral(n); }, py::arg("value"))
        .def_static("var", &Term::var, py::arg("name"))
        .def_static("constant", &Term::constant, py::arg("name"))
        .def_static("app", &Term::app, py::arg("fn"), py::arg("args"))
        .def_static("var_app", &Term::var_app, py::arg("fn"), py::arg("args"))
        .def_static("ellipsis", &Term::ellipsis, py::arg("fn"), py::arg("body"), py::arg("binder"),
                    py::arg("bound"))
        .def_static("nary_ellipsis", &Term::nary_ellipsis, py::arg("fn"), py::arg("prefix"),
                    py::arg("body"), py::arg("binder"), py::arg("bound"))
        .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
        .def("__str__", &print_term)
        .def("__repr__", [](const Term& t) { return "Term(" + print_term(t) + ")"; });

    py::class_<Formula>(m, "Formula")
        .def_static("eq", &Formula::eq, py::arg("lhs"), py::arg("rhs"))
        .def_static("pred", &Formula::pred, py::arg("name"), py::arg("args"))
        .def_static("negate", &Formula::negate, py::arg("body"))
        .def_static("conj", &Formula::conj, py::arg("lhs"), py::arg("rhs"))
        .def_static("disj", &Formula::disj, py::arg("lhs"), py::arg("rhs"))
        .def_static("implies", &Formula::implies, py::arg("lhs"), py::arg("rhs"))
        .def_static("iff", &Formula::iff, py::arg("lhs"), py::arg("rhs"))
        .def_static("forall", &Formula::forall, py::arg("var"), py::arg("body"))
        .def_static("exists", &Formula::exists, py::arg("var"), py::arg("body"))
        .def("__eq__", [](const Formula& a, const Formula& b) { return a == b; })
        .def("__str__", &print_formula)
        .def("__repr__", [](const Formula& f) { return "Formula(" + print_formula(f) + ")"; });

    m.def("parse_term", &parse_term, py::arg("src"), py::arg("sig"));
    m.def("parse_formula", &parse_formula, py::arg("src"), py::arg("sig"));
    m.def("print_term", &print_term, py::arg("term"));
    m.def("print_formula", &print_formula, py::arg("formula"));

    m.def("free_vars", [](const Term& t) { return free_vars(t); }, py::arg("term"));
    m.def("free_vars_formula", [](const Formula& f) { return free_vars(f); }, py::arg("formula"));
    m.def("complexity", &complexity, py::arg("term"));

    m.def("substitute", &substitute, py::arg("target"), py::arg("var"), py::arg("term"));
    m.def("substitutable", &substitutable, py::arg("term"), py::arg("var"), py::arg("target"));
    m.def("substitute_formula", &substitute_formula, py::arg("target"), py::arg("var"),
          py::arg("term"));
    m.def("substitutable_formula", &substitutable_formula, py::arg("term"), py::arg("var"),
          py::arg("target"));

    py::class_<Assignment>(m, "Assignment")
        .def(py::init<>())
        .def(py::init<std::map<std::string, Nat>, Nat>(), py::arg("bindings"),
             py::arg("default_value") = Nat(0))
        .def("get", &Assignment::get, py::arg("var"))
        .def("with_", &Assignment::with, py::arg("var"), py::arg("value"))
        .def_static("parse", &Assignment::parse, py::arg("text"))
        .def("__repr__", [](const Assignment& s) { return "Assignment(" + s.to_text() + ")"; });

    py::class_<EvalBudget>(m, "EvalBudget")
        .def(py::init<>())
        .def_readwrite("max_ellipsis_width", &EvalBudget::max_ellipsis_width)
        .def_readwrite("max_total_steps", &EvalBudget::max_total_steps);

    py::class_<Model>(m, "Model")
        .def(py::init<Signature>(), py::arg("sig"))
        .def("interpret_fixed", &Model::interpret_fixed, py::arg("name"), py::arg("fn"),
             py::return_value_policy::reference_internal)
        .def("interpret_variadic", &Model::interpret_variadic, py::arg("name"), py::arg("fn"),
             py::return_value_policy::reference_internal)
        .def("interpret_nary_variadic", &Model::interpret_nary_variadic, py::arg("name"),
             py::arg("fn"), py::return_value_policy::reference_internal)
        .def("interpret_predicate", &Model::interpret_predicate, py::arg("name"), py::arg("fn"),
             py::return_value_policy::reference_internal)
        .def("interpret_constant", &Model::interpret_constant, py::arg("name"), py::arg("value"),
             py::return_value_policy::reference_internal)
        .def("designate_leq", &Model::designate_leq, py::arg("name"),
             py::return_value_policy::reference_internal);

    m.def("std_model", &std_model);

    py::class_<GeneralizedModel>(m, "GeneralizedModel")
        .def(py::init<Signature>(), py::arg("sig"))
        .def("interpret_fixed", &GeneralizedModel::interpret_fixed, py::arg("name"), py::arg("fn"),
             py::return_value_policy::reference_internal)
        .def("interpret_variadic", &GeneralizedModel::interpret_variadic, py::arg("name"),
             py::arg("fn"), py::return_value_policy::reference_internal)
        .def("interpret_nary_variadic", &GeneralizedModel::interpret_nary_variadic,
             py::arg("name"), py::arg("fn"), py::return_value_policy::reference_internal)
        .def("interpret_constant", &GeneralizedModel::interpret_constant, py::arg("name"),
             py::arg("value"), py::return_value_policy::reference_internal)
        .def_static("truncation_of", &GeneralizedModel::truncation_of, py::arg("model"));

    py::enum_<StreamMode>(m, "StreamMode")
        .value("Syntactic", StreamMode::Syntactic)
        .value("Semantic", StreamMode::Semantic);

    m.def("interp_syntactic", &interp_syntactic, py::arg("term"), py::arg("model"),
          py::arg("assignment") = Assignment{}, py::arg("budget") = EvalBudget{});
    m.def("interp_semantic", &interp_semantic, py::arg("term"), py::arg("model"),
          py::arg("assignment") = Assignment{}, py::arg("budget") = EvalBudget{});
    m.def("interp_generalized", &interp_generalized, py::arg("term"), py::arg("model"),
          py::arg("assignment") = Assignment{}, py::arg("budget") = EvalBudget{},
          py::arg("mode") = StreamMode::Semantic);

    m.def(
        "satisfies",
        [](const Formula& f, const Model& m_, const Assignment& s, const EvalBudget& budget,
           std::uint64_t cutoff) { return truth_to_py(satisfies(f, m_, s, budget, cutoff)); },
        py::arg("formula"), py::arg("model"), py::arg("assignment") = Assignment{},
        py::arg("budget") = EvalBudget{}, py::arg("cutoff") = kDefaultQuantifierCutoff,
        "Three-valued satisfaction: True, False, or None for unknown.");

    py::class_<UqfFormula>(m, "UqfFormula")
        .def_property_readonly("formula", &UqfFormula::formula)
        .def("__repr__",
             [](const UqfFormula& f) { return "UqfFormula(" + print_formula(f.formula()) + ")"; });

    m.def(
        "classify",
        [](const Formula& f, const Signature& sig) {
            auto result = classify(f, sig);
            if (const NotUqf* bad = std::get_if<NotUqf>(&result)) throw NotUqfException(*bad);
            return std::get<UqfFormula>(result);
        },
        py::arg("formula"), py::arg("sig"),
        "Certify membership in the bounded-quantifier fragment; raises NotUqfError.");
    m.def(
        "is_uqf",
        [](const Formula& f, const Signature& sig) {
            return std::holds_alternative<UqfFormula>(classify(f, sig));
        },
        py::arg("formula"), py::arg("sig"));
    m.def("eliminate", &eliminate, py::arg("uqf"));
    m.def("eliminate_to_formula", &eliminate_to_formula, py::arg("uqf"));

    py::class_<IotaTable>(m, "IotaTable")
        .def(py::init([](std::size_t arity, std::map<std::vector<Nat>, std::vector<Nat>> entries,
                         std::vector<Nat> default_seq) {
                 IotaTable t{arity, std::move(entries), std::move(default_seq)};
                 auto violations = t.validate();
                 if (!violations.empty()) throw py::value_error(violations.front());
                 return t;
             }),
             py::arg("arity"), py::arg("entries"), py::arg("default_seq"))
        .def_readonly("arity", &IotaTable::arity)
        .def_static("from_file", &IotaTable::from_file, py::arg("path"))
        .def("to_text", &IotaTable::to_text);

    m.def("borel_signature", &borel_signature, py::arg("n"));
    m.def(
        "build_sentence",
        [](const IotaTable& iota, std::size_t n, const std::string& kind) {
            return build_sentence(iota, n, kind_from_string(kind));
        },
        py::arg("iota"), py::arg("n"), py::arg("kind"));
    m.def(
        "check_membership",
        [](const std::vector<Nat>& prefix, const IotaTable& iota, const Formula& f,
           std::uint64_t cutoff, const EvalBudget& budget) {
            return truth_to_py(check_membership(BorModel{prefix, iota}, f, cutoff, budget));
        },
        py::arg("prefix"), py::arg("iota"), py::arg("sentence"), py::arg("cutoff") = 8,
        py::arg("budget") = EvalBudget{},
        "Membership verdict from a finite prefix: True, False, or None for unknown.");

    py::class_<GeneratorConfig>(m, "GeneratorConfig")
        .def(py::init<>())
        .def_readwrite("seed", &GeneratorConfig::seed)
        .def_readwrite("max_depth", &GeneratorConfig::max_depth)
        .def_readwrite("max_numeral", &GeneratorConfig::max_numeral)
        .def_readwrite("variable_pool", &GeneratorConfig::variable_pool)
        .def_readwrite("ellipsis_probability", &GeneratorConfig::ellipsis_probability);

    m.def("gen_term", &gen_term, py::arg("config"), py::arg("sig"));

    m.def(
        "run_props",
        [](const std::string& suite, std::uint64_t cases, std::uint64_t seed) {
            auto parsed = suite_from_name(suite);
            if (!parsed) throw py::value_error("unknown suite '" + suite + "'");
            PropReport report = run_props(*parsed, cases, seed);
            return py::make_tuple(report.passed(), report.render());
        },
        py::arg("suite"), py::arg("cases"), py::arg("seed") = 42,
        "Run a property suite; returns (passed, report_text).");
}
