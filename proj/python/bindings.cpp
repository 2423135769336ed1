#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <sstream>

#include "cmeadow/evaluator.hpp"
#include "cmeadow/events.hpp"
#include "cmeadow/flattener.hpp"
#include "cmeadow/measures.hpp"
#include "cmeadow/oracle.hpp"

namespace py = pybind11;
using namespace cmeadow;

namespace {

Mode to_mode(const std::string& s) {
  if (s == "bot") return Mode::Bottom;
  if (s == "signed") return Mode::Signed;
  if (s == "suppes") return Mode::SuppesOno;
  throw py::value_error("mode must be bot, signed or suppes");
}

Carrier to_carrier(const std::string& s) {
  if (s == "exact") return Carrier::Exact;
  if (s == "approx") return Carrier::Approx;
  throw py::value_error("carrier must be exact or approx");
}

/// Accepts a list of weights or a dict label -> weight; weights are str(w).
Pmf to_pmf(const py::handle& obj) {
  std::vector<Pmf::Entry> entries;
  if (py::isinstance<py::dict>(obj)) {
    for (auto item : py::reinterpret_borrow<py::dict>(obj))
      entries.emplace_back(py::str(item.first).cast<std::string>(),
                           parse_rational(py::str(item.second).cast<std::string>()));
    return Pmf(std::move(entries));
  }
  std::vector<Rational> w;
  for (auto item : obj) w.push_back(parse_rational(py::str(item).cast<std::string>()));
  return Pmf::from_weights(w);
}

std::string eval_text(const std::string& text, const std::map<std::string, std::string>& bindings,
                      const std::map<std::string, py::object>& functions, const std::string& mode,
                      const std::string& carrier) {
  Environment env;
  for (const auto& [name, value] : bindings) env.bind(name, parse_exact_value(value));
  for (const auto& [name, obj] : functions) {
    Pmf p = to_pmf(obj);
    std::map<std::string, ExactValue> table;
    for (const auto& [label, w] : p.entries()) table[label] = ExactValue::ordinary(w);
    env.bind_function(name, std::move(table));
    env.declare_labels(p.labels());
  }
  return eval(parse(text), env, to_mode(mode), to_carrier(carrier)).to_string();
}

std::string measure(const std::string& which, const py::object& p, const py::object& q, const std::string& variant,
                    const std::string& mode, const std::string& carrier) {
  auto v = parse_variant(variant);
  if (!v) throw py::value_error("unknown variant: " + variant);
  Pmf pp = to_pmf(p);
  std::optional<Pmf> qq;
  if (!q.is_none()) qq = to_pmf(q);
  Mode m = to_mode(mode);
  Carrier c = to_carrier(carrier);
  if (*v != MeasureVariant::Direct) {
    Term t = which == "entropy" ? build_entropy_term(pp.size(), *v) : build_cross_entropy_term(pp.size(), *v);
    return eval(t, measure_environment(pp, qq ? &*qq : nullptr), m, c).to_string();
  }
  if (which == "entropy") return entropy(pp, c, m).to_string();
  if (which == "crossentropy") return cross_entropy(pp, *qq, c, m).to_string();
  if (which == "kl") return kl_divergence(pp, *qq, c, m).to_string();
  return js_divergence(pp, *qq, c, m).to_string();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Common meadow arithmetic with totalized log2";

  static py::exception<Error> base(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", base.ptr());
  static py::exception<InexactError> inexact(m, "InexactError", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InexactError& e) {
      py::set_error(inexact, e.what());
    } catch (const Error& e) {
      py::set_error(base, e.what());
    }
  });

  m.def("eval", &eval_text, py::arg("term"), py::arg("bindings") = std::map<std::string, std::string>{},
        py::arg("functions") = std::map<std::string, py::object>{}, py::arg("mode") = "bot",
        py::arg("carrier") = "approx", "Evaluate a term; values are rendered as text (bot, +inf, 3/4, ...).");
  m.def("normalize", [](const std::string& text) { return print(parse(text)); }, py::arg("term"),
        "Parse and print a term.");
  m.def(
      "flatten",
      [](const std::string& text) {
        FlatFracterm f = flatten(parse(text));
        return py::make_tuple(print(f.numerator), print(f.denominator));
      },
      py::arg("term"), "Flatten a term into (numerator, denominator).");

  m.def(
      "entropy", [](const py::object& p, const std::string& variant, const std::string& mode,
                    const std::string& carrier) { return measure("entropy", p, py::none(), variant, mode, carrier); },
      py::arg("p"), py::arg("variant") = "direct", py::arg("mode") = "bot", py::arg("carrier") = "approx");
  for (const char* name : {"crossentropy", "kl", "js"}) {
    std::string which = name;
    m.def(
        name,
        [which](const py::object& p, const py::object& q, const std::string& variant, const std::string& mode,
                const std::string& carrier) { return measure(which, p, q, variant, mode, carrier); },
        py::arg("p"), py::arg("q"), py::arg("variant") = "direct", py::arg("mode") = "bot",
        py::arg("carrier") = "approx");
  }

  m.def(
      "bayes",
      [](const py::object& p) {
        EventSpace space(to_pmf(p));
        BayesReport r = bayes_check(space);
        py::dict out;
        out["pairs"] = r.pairs;
        out["guarded_pairs"] = r.guarded_pairs;
        out["guarded_failures"] = r.guarded_failures.size();
        out["unguarded_differences"] = r.unguarded_differences.size();
        return out;
      },
      py::arg("p"));

  m.def("suites", &oracle::suite_names);
  m.def(
      "check",
      [](const std::string& suite, std::uint64_t seed, std::size_t count, int depth, double tolerance) {
        oracle::SuiteOptions o;
        o.seed = seed;
        o.random_term_count = count;
        o.random_term_depth = depth;
        o.tolerance = tolerance;
        py::list out;
        std::vector<oracle::Verdict> verdicts;
        {
          py::gil_scoped_release release;
          verdicts = oracle::run_suite(suite, o);
        }
        for (const auto& v : verdicts) {
          py::dict d;
          d["name"] = v.name;
          d["passed"] = v.pass;
          d["checked"] = v.checked;
          d["detail"] = v.detail;
          d["text"] = oracle::describe(v);
          out.append(d);
        }
        return out;
      },
      py::arg("suite"), py::arg("seed") = 1, py::arg("count") = 1000, py::arg("depth") = 4,
      py::arg("tolerance") = oracle::kDefaultTolerance);
}
