#pragma once

#include <string>

#include "palclosure/compact.hpp"
#include "palclosure/dfa.hpp"
#include "palclosure/pal_suffix.hpp"

namespace palclosure {

// JSON schema shared by letter and compact automata:
//   { "states": [ids], "initial": id, "terminals": [ids],
//     "edges": [{"from": id, "label": string, "to": id}] }
// ids are canonical integers and edges are sorted by (from, label). Counting
// graphs use the same schema with integer labels.
std::string to_json(const Dfa& dfa);
std::string to_json(const CompactAutomaton& a);
std::string to_json(const CountingGraph& g);

// DOT output: doubled circles for terminal states, an incoming arrow marker
// on the initial state, word edge labels.
std::string to_dot(const Dfa& dfa);
std::string to_dot(const CompactAutomaton& a);
std::string to_dot(const CountingGraph& g);

// Line-oriented text listing (states / initial / terminals / edges).
std::string to_text(const Dfa& dfa);
std::string to_text(const CompactAutomaton& a);
std::string to_text(const CountingGraph& g);

}  // namespace palclosure
