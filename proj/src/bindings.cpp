#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "palclosure/compact.hpp"
#include "palclosure/dfa.hpp"
#include "palclosure/free_group.hpp"
#include "palclosure/pal.hpp"
#include "palclosure/pal_suffix.hpp"
#include "palclosure/serialize.hpp"
#include "palclosure/words.hpp"

namespace py = pybind11;

using namespace palclosure;

namespace {

std::vector<std::tuple<int, std::string, int>> edge_tuples(const CompactAutomaton& a) {
  std::vector<std::tuple<int, std::string, int>> out;
  for (const auto& e : a.edges()) {
    out.emplace_back(e.from, e.label, e.to);
  }
  return out;
}

std::vector<std::tuple<int, char, int>> dfa_edge_tuples(const Dfa& dfa) {
  std::vector<std::tuple<int, char, int>> out;
  for (int q = 0; q < dfa.state_count(); ++q) {
    for (const auto& [letter, target] : dfa.transitions_from(q)) {
      out.emplace_back(q, letter, target);
    }
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_palclosure, m) {
  m.doc() =
      "Iterated palindromic closure on words and free groups, with the "
      "suffix automaton and minimal compact suffix automaton of Pal(u)";

  // words
  m.def("reverse_word", &reversed, py::arg("word"));
  m.def("is_palindrome", &is_palindrome, py::arg("word"));
  m.def("longest_palindromic_suffix", &longest_palindromic_suffix, py::arg("word"));
  m.def("palindromic_closure", &palindromic_closure, py::arg("word"));
  m.def("left_special_factors", &left_special_factors, py::arg("word"));
  m.def("pal_word", &pal_word_fast, py::arg("directive"));
  m.def("pal_prefix_lengths", &pal_prefix_lengths, py::arg("directive"));

  // free group
  py::class_<GroupElement>(m, "GroupElement",
                           "Reduced free-group element; uppercase letters are "
                           "inverse generators")
      .def(py::init([](const std::string& text) { return GroupElement::parse(text); }),
           py::arg("text"))
      .def_static("from_word", &GroupElement::from_word, py::arg("word"))
      .def("__str__", &GroupElement::str)
      .def("__repr__",
           [](const GroupElement& u) { return "GroupElement('" + u.str() + "')"; })
      .def("__mul__",
           [](const GroupElement& u, const GroupElement& v) { return u * v; })
      .def(py::self == py::self)
      .def("__hash__",
           [](const GroupElement& u) { return py::hash(py::str(u.str())); })
      .def("inverse", &GroupElement::inverse)
      .def("reversed", &GroupElement::reversed)
      .def("degree", &GroupElement::degree, py::arg("letter"))
      .def("algebraic_length", &GroupElement::algebraic_length)
      .def("is_palindrome", &GroupElement::is_palindrome)
      .def("is_identity", &GroupElement::is_identity)
      .def("is_positive", &GroupElement::is_positive)
      .def("to_word", &GroupElement::to_word)
      .def("__len__", &GroupElement::length);

  m.def("pal_group", &pal_group, py::arg("element"));
  m.def("apply_L", &apply_L, py::arg("basis"), py::arg("element"));
  m.def("apply_R", &apply_R, py::arg("basis"), py::arg("element"));
  m.def("check_justin_R", &check_justin_R, py::arg("u"), py::arg("v"));
  m.def("check_justin_L", &check_justin_L, py::arg("u"), py::arg("v"));
  m.def(
      "cocycle_witness_search",
      [](const std::string& letters, int max_len) {
        return cocycle_witness_search(Alphabet(letters), max_len);
      },
      py::arg("letters"), py::arg("max_len"));
  m.def(
      "transducer_emissions",
      [](const Word& input) {
        TransducerState state;
        std::vector<Word> out;
        for (char a : input) {
          TransducerStep step = transducer_step(state, a);
          out.push_back(step.output);
          state = std::move(step.state);
        }
        return out;
      },
      py::arg("input"),
      "Per-letter outputs of the sequential transducer computing Pal");

  // automata
  py::class_<Dfa>(m, "Dfa")
      .def_property_readonly("state_count", &Dfa::state_count)
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("terminals",
                             [](const Dfa& d) {
                               return std::vector<int>(d.terminals().begin(),
                                                       d.terminals().end());
                             })
      .def_property_readonly("edges", &dfa_edge_tuples)
      .def("run",
           [](const Dfa& d, const Word& w) { return d.run(w); },
           py::arg("word"))
      .def("to_json", [](const Dfa& d) { return to_json(d); })
      .def("to_dot", [](const Dfa& d) { return to_dot(d); });

  m.def(
      "minimal_dfa",
      [](const std::vector<Word>& language) {
        return minimal_dfa(std::set<Word>(language.begin(), language.end()));
      },
      py::arg("language"));
  m.def("suffix_automaton", &suffix_automaton, py::arg("word"));
  m.def(
      "verify_pal_suffix_theorem",
      [](const Word& directive) {
        const TheoremReport report = verify_pal_suffix_theorem(directive);
        return std::make_pair(report.passed, report.detail);
      },
      py::arg("directive"));
  m.def("enumerate_dfa_language",
        [](const Dfa& d) { return enumerate_language(d); });

  // compact automata
  py::class_<CompactAutomaton>(m, "CompactAutomaton")
      .def_property_readonly("state_count", &CompactAutomaton::state_count)
      .def_property_readonly("edge_count", &CompactAutomaton::edge_count)
      .def_property_readonly("initial", &CompactAutomaton::initial)
      .def_property_readonly("states",
                             [](const CompactAutomaton& a) {
                               return std::vector<int>(a.states().begin(),
                                                       a.states().end());
                             })
      .def_property_readonly("terminals",
                             [](const CompactAutomaton& a) {
                               return std::vector<int>(a.terminals().begin(),
                                                       a.terminals().end());
                             })
      .def_property_readonly("edges", &edge_tuples)
      .def("to_json", [](const CompactAutomaton& a) { return to_json(a); })
      .def("to_dot", [](const CompactAutomaton& a) { return to_dot(a); });

  m.def("from_dfa", &CompactAutomaton::from_dfa, py::arg("dfa"));
  m.def(
      "minimal_compact",
      [](const std::vector<Word>& language) {
        return minimal_compact(std::set<Word>(language.begin(), language.end()));
      },
      py::arg("language"));
  m.def("special_states", &special_states, py::arg("automaton"));
  m.def("elementary_reduction", &elementary_reduction, py::arg("automaton"),
        py::arg("state"));
  m.def("reduce_to_minimal", &reduce_to_minimal, py::arg("automaton"));
  m.def("enumerate_language",
        [](const CompactAutomaton& a) { return enumerate_language(a); },
        py::arg("automaton"));
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def("canonicalized", &canonicalized, py::arg("automaton"));

  // direct construction of the compact suffix automaton
  py::class_<PalCompactAutomaton>(m, "PalCompactAutomaton")
      .def_property_readonly("directive", &PalCompactAutomaton::directive)
      .def_property_readonly("pal", &PalCompactAutomaton::pal)
      .def_property_readonly("pal_lengths", &PalCompactAutomaton::pal_lengths)
      .def_property_readonly("automaton", &PalCompactAutomaton::automaton);

  m.def("build_direct", &build_direct, py::arg("directive"));
  m.def("extend", &extend, py::arg("automaton"), py::arg("letter"));
  m.def("restrict_to_prefix", &restrict_to_prefix, py::arg("automaton"),
        py::arg("prefix"));
  m.def("path_count_to_final", &path_count_to_final, py::arg("directive"));
  m.def("transition_count", &transition_count, py::arg("directive"));

  py::class_<CountingGraph>(m, "CountingGraph")
      .def_property_readonly("start",
                             [](const CountingGraph& g) { return g.start; })
      .def_property_readonly("vertex_count",
                             [](const CountingGraph& g) { return g.vertex_count; })
      .def_property_readonly("edges",
                             [](const CountingGraph& g) {
                               std::vector<std::tuple<int, long long, int>> out;
                               for (const auto& e : g.edges) {
                                 out.emplace_back(e.from, e.weight, e.to);
                               }
                               return out;
                             })
      .def("to_json", [](const CountingGraph& g) { return to_json(g); })
      .def("to_dot", [](const CountingGraph& g) { return to_dot(g); });

  m.def("counting_graph", &counting_graph, py::arg("directive"));
  m.def("has_unique_path_weights", &has_unique_path_weights, py::arg("graph"),
        py::arg("n"));
  m.def("fibonacci_length_check", &fibonacci_length_check, py::arg("n"));

  m.attr("__version__") = "0.1.0";
}
