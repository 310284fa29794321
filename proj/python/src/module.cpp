// Python bindings. Structured arguments cross the boundary as JSON text; the
// Python package wraps these in dict-based helpers.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cts/caps.hpp"
#include "cts/errors.hpp"
#include "cts/io.hpp"
#include "cts/reductions.hpp"
#include "cts/regex.hpp"
#include "cts/shuffle.hpp"
#include "cts/solvers.hpp"

namespace py = pybind11;
using namespace cts;

namespace {

Caps caps_of(const std::string& text) { return text.empty() ? Caps::from_env() : Caps::parse(text, Caps::from_env()); }

std::string solve(const std::string& instance, const std::string& language, const std::string& solver,
                  std::size_t insertions, const std::string& caps) {
  Instance inst = parse_instance(instance);
  LanguageSpec spec = parse_language(language);
  DispatchOptions opts{caps_of(caps), solver, insertions};
  SolveResult r;
  {
    py::gil_scoped_release release;
    r = dispatch(inst, spec, opts);
  }
  return report_to_json(RunReport{"inline", spec.kind(), r, std::nullopt}, as_dag(inst)).dump();
}

Semiautomaton semiautomaton_of(const std::string& regex, const std::string& alphabet, const std::string& json) {
  if (!regex.empty()) return Semiautomaton::of(compile_regex(regex, alphabet.empty() ? regex_symbols(regex) : Alphabet(alphabet)));
  Json j = parse_json(json);
  if (j.contains("semiautomaton")) return semiautomaton_from_json(j.at("semiautomaton"));
  if (j.contains("dfa")) return Semiautomaton::of(minimize(dfa_from_json(j.at("dfa"))));
  return semiautomaton_from_json(j);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Constrained topological sorting and shuffle solver";

  static py::exception<CapExceeded> cap_exc(m, "CapExceeded", PyExc_RuntimeError);
  static py::exception<ParseError> parse_exc(m, "ParseError", PyExc_ValueError);
  static py::exception<PreconditionError> pre_exc(m, "PreconditionError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const CapExceeded& e) {
      py::set_error(cap_exc, e.what());
    } catch (const ParseError& e) {
      py::set_error(parse_exc, e.what());
    } catch (const PreconditionError& e) {
      py::set_error(pre_exc, e.what());
    } catch (const Error& e) {
      py::set_error(PyExc_ValueError, e.what());
    }
  });

  m.def("solve_json", &solve, py::arg("instance"), py::arg("language"), py::arg("solver") = "",
        py::arg("insertions") = 0, py::arg("caps") = "");
  m.def(
      "classify_json",
      [](const std::string& regex, const std::string& alphabet, const std::string& json, const std::string& caps) {
        return classification_to_json(classify(semiautomaton_of(regex, alphabet, json), caps_of(caps))).dump();
      },
      py::arg("regex") = "", py::arg("alphabet") = "", py::arg("semiautomaton") = "", py::arg("caps") = "");
  m.def(
      "monoid_json",
      [](const std::string& regex, const std::string& alphabet, const std::string& json, const std::string& caps) {
        return monoid_to_json(transition_monoid(semiautomaton_of(regex, alphabet, json), caps_of(caps))).dump();
      },
      py::arg("regex") = "", py::arg("alphabet") = "", py::arg("semiautomaton") = "", py::arg("caps") = "");
  m.def("solver_tags", &solver_tags);

  m.def("filter_ab_from_power", &filter_ab_from_power, py::arg("B"), py::arg("n"));
  m.def("filter_ustar_from_ab", &filter_ustar_from_ab, py::arg("u"), py::arg("n"));
  m.def("filter_aabb_from_ab", &filter_aabb_from_ab, py::arg("n"));
  m.def("three_partition_exists", &three_partition_exists, py::arg("E"), py::arg("B"));
  m.def(
      "gen_unary3partition",
      [](const std::vector<std::size_t>& E, std::size_t B) {
        auto h = gen_unary3partition(E, B);
        return py::make_tuple(h.instance.strings(), h.target_regex);
      },
      py::arg("E"), py::arg("B"));
  m.def("in_shuffle", &in_shuffle, py::arg("w"), py::arg("words"));
}
