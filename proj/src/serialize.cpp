#include "palclosure/serialize.hpp"

#include <sstream>

#include <json.hpp>

namespace palclosure {

namespace {

using nlohmann::json;

struct GraphView {
  std::vector<int> states;
  int initial = 0;
  std::vector<int> terminals;
  // Labels are kept as serialized json values so word and integer labels
  // share one path.
  struct Edge {
    int from;
    json label;
    int to;
  };
  std::vector<Edge> edges;
};

GraphView view_of(const Dfa& dfa) {
  GraphView v;
  for (int q = 0; q < dfa.state_count(); ++q) {
    v.states.push_back(q);
    for (const auto& [letter, target] : dfa.transitions_from(q)) {
      v.edges.push_back({q, json(Word(1, letter)), target});
    }
  }
  v.initial = dfa.initial();
  v.terminals.assign(dfa.terminals().begin(), dfa.terminals().end());
  return v;
}

GraphView view_of(const CompactAutomaton& a) {
  const CompactAutomaton c = canonicalized(a);
  GraphView v;
  v.states.assign(c.states().begin(), c.states().end());
  v.initial = c.initial();
  v.terminals.assign(c.terminals().begin(), c.terminals().end());
  for (const auto& e : c.edges()) {
    v.edges.push_back({e.from, json(e.label), e.to});
  }
  return v;
}

GraphView view_of(const CountingGraph& g) {
  GraphView v;
  for (int q = 0; q < g.vertex_count; ++q) {
    v.states.push_back(q);
  }
  v.initial = g.start;
  for (const auto& e : g.edges) {
    v.edges.push_back({e.from, json(e.weight), e.to});
  }
  return v;
}

std::string render_json(const GraphView& v) {
  json out;
  out["states"] = v.states;
  out["initial"] = v.initial;
  out["terminals"] = v.terminals;
  json edges = json::array();
  for (const auto& e : v.edges) {
    edges.push_back({{"from", e.from}, {"label", e.label}, {"to", e.to}});
  }
  out["edges"] = edges;
  return out.dump(2) + "\n";
}

std::string label_text(const json& label) {
  return label.is_string() ? label.get<std::string>() : label.dump();
}

std::string render_dot(const GraphView& v) {
  std::ostringstream out;
  out << "digraph {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  start [shape=none, label=\"\"];\n";
  out << "  start -> " << v.initial << ";\n";
  const std::set<int> terminals(v.terminals.begin(), v.terminals.end());
  for (int q : v.states) {
    out << "  " << q << (terminals.count(q) ? " [shape=doublecircle];\n" : ";\n");
  }
  for (const auto& e : v.edges) {
    out << "  " << e.from << " -> " << e.to << " [label=\"" << label_text(e.label)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_text(const GraphView& v) {
  std::ostringstream out;
  out << "states " << v.states.size() << "\n";
  out << "initial " << v.initial << "\n";
  out << "terminals";
  for (int t : v.terminals) {
    out << ' ' << t;
  }
  out << "\n";
  for (const auto& e : v.edges) {
    out << "edge " << e.from << ' ' << label_text(e.label) << ' ' << e.to << "\n";
  }
  return out.str();
}

}  // namespace

std::string to_json(const Dfa& dfa) { return render_json(view_of(dfa)); }
std::string to_json(const CompactAutomaton& a) { return render_json(view_of(a)); }
std::string to_json(const CountingGraph& g) { return render_json(view_of(g)); }

std::string to_dot(const Dfa& dfa) { return render_dot(view_of(dfa)); }
std::string to_dot(const CompactAutomaton& a) { return render_dot(view_of(a)); }
std::string to_dot(const CountingGraph& g) { return render_dot(view_of(g)); }

std::string to_text(const Dfa& dfa) { return render_text(view_of(dfa)); }
std::string to_text(const CompactAutomaton& a) { return render_text(view_of(a)); }
std::string to_text(const CountingGraph& g) { return render_text(view_of(g)); }

}  // namespace palclosure
