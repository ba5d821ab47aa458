#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "palclosure/dfa.hpp"
#include "palclosure/words.hpp"

namespace palclosure {

// Deterministic automaton whose edges carry nonempty words: for each state,
// the labels of outgoing edges begin with pairwise-distinct letters. State
// identifiers are stable under elementary reductions, so they need not be
// contiguous.
class CompactAutomaton {
 public:
  struct Edge {
    int from;
    Word label;
    int to;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  CompactAutomaton(std::set<int> states, int initial, std::set<int> terminals,
                   std::vector<Edge> edges);

  static CompactAutomaton from_dfa(const Dfa& dfa);

  const std::set<int>& states() const { return states_; }
  int initial() const { return initial_; }
  const std::set<int>& terminals() const { return terminals_; }
  bool contains(int q) const { return states_.count(q) > 0; }
  bool is_terminal(int q) const { return terminals_.count(q) > 0; }

  // Outgoing edges of q as (label, target), sorted by label.
  const std::vector<std::pair<Word, int>>& out(int q) const;
  // All edges sorted by (from, label, to).
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;
  std::size_t state_count() const { return states_.size(); }

  friend bool operator==(const CompactAutomaton&, const CompactAutomaton&) = default;

 private:
  std::set<int> states_;
  int initial_;
  std::set<int> terminals_;
  std::map<int, std::vector<std::pair<Word, int>>> out_;
};

// States that are initial, terminal, or have two or more outgoing edges.
std::set<int> special_states(const CompactAutomaton& a);

struct SpecialPath {
  int from;
  Word label;
  int to;

  friend bool operator==(const SpecialPath&, const SpecialPath&) = default;
  friend auto operator<=>(const SpecialPath&, const SpecialPath&) = default;
};

// Maximal paths between special states passing through no intermediate
// special state. Requires a trim automaton.
std::vector<SpecialPath> special_paths(const CompactAutomaton& a);

// Suppresses the non-special state q: its unique outgoing edge (q, v, r) is
// folded into every incoming edge, (p, u, q) becoming (p, uv, r). Recognizes
// the same language. Throws if q is special, absent, or lacks the unique
// outgoing edge.
CompactAutomaton elementary_reduction(const CompactAutomaton& a, int q);

// Suppresses all non-special states (in topological order). On an input with
// pairwise-distinct state residuals, e.g. a minimal DFA, the result is the
// minimal compact automaton of the language.
CompactAutomaton reduce_to_minimal(const CompactAutomaton& a);

// Minimal compact automaton built directly from the special residuals of the
// language: u = 1, u in L, or two residual words starting with different
// letters. Throws on an empty language.
CompactAutomaton minimal_compact(const std::set<Word>& language);

// Labels of all successful paths; throws on a cycle.
std::set<Word> enumerate_language(const CompactAutomaton& a);

bool is_trim(const CompactAutomaton& a);

// Breadth-first relabeling from the initial state, outgoing edges in label
// order; states become 0..n-1. Requires every state reachable.
CompactAutomaton canonicalized(const CompactAutomaton& a);

// Equality of canonical forms (isomorphism for deterministic automata).
bool equivalent(const CompactAutomaton& a, const CompactAutomaton& b);

struct ReductionMap {
  std::map<int, int> mapping;  // special state of the source -> state of target
  CompactAutomaton target;     // the minimal compact automaton
};

// The unique reduction from a trim deterministic compact automaton onto the
// minimal compact automaton of its language: p maps to the residual u^-1 L
// for any u reaching p. Verifies the reduction conditions and surjectivity,
// throwing std::logic_error if any fails.
ReductionMap compute_reduction(const CompactAutomaton& a);

namespace detail {
std::pair<CompactAutomaton, std::map<int, std::set<Word>>>
minimal_compact_with_residuals(const std::set<Word>& language);
}  // namespace detail

}  // namespace palclosure
