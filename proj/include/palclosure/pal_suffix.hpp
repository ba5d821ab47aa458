#pragma once

#include <cstdint>
#include <vector>

#include "palclosure/compact.hpp"
#include "palclosure/words.hpp"

namespace palclosure {

// Minimal compact automaton of the set of suffixes of Pal(u), built directly
// from the directive word u. State i is the prefix of u of length i; all
// states are terminal and 0 is initial. The edge into state i carries the
// word quotient Pal(u[0..i-1])^-1 Pal(u[0..i]), so the label depends only on
// the edge's end.
class PalCompactAutomaton {
 public:
  const Word& directive() const { return directive_; }
  const Word& pal() const { return pal_; }
  // |Pal(p)| for each prefix p of the directive (index = |p|).
  const std::vector<std::size_t>& pal_lengths() const { return pal_lengths_; }
  const CompactAutomaton& automaton() const { return automaton_; }

 private:
  PalCompactAutomaton(Word directive, Word pal, std::vector<std::size_t> lengths,
                      CompactAutomaton automaton);

  friend PalCompactAutomaton build_direct(const Word& u);
  friend PalCompactAutomaton extend(const PalCompactAutomaton& a, char x);
  friend PalCompactAutomaton restrict_to_prefix(const PalCompactAutomaton& a,
                                                const Word& p);

  Word directive_;
  Word pal_;
  std::vector<std::size_t> pal_lengths_;
  CompactAutomaton automaton_;
};

// For each factorization u = xyaz with a a letter and y a-free, an edge
// x -> xya labeled Pal(xy)^-1 Pal(xya). Labels are computed by prefix removal
// on the materialized Pal prefixes.
PalCompactAutomaton build_direct(const Word& u);

// Incremental step: with u2 the longest x-free suffix of u = h u2, adds the
// terminal state ux and one edge h p -> ux for every prefix p of u2, labeled
// Pal(u)^-1 Pal(ux). Equals build_direct(ux).
PalCompactAutomaton extend(const PalCompactAutomaton& a, char x);

// Sub-automaton induced on the states that are prefixes of p; equals
// build_direct(p). Throws if p is not a prefix of the directive.
PalCompactAutomaton restrict_to_prefix(const PalCompactAutomaton& a, const Word& p);

// Number of paths from the initial state to the last state of
// build_direct(u); equals |Pal(u)| - |Pal(u minus its last letter)| for
// nonempty u, and 1 for empty u.
long long path_count_to_final(const Word& u);

// Sum over the alphabet of the 1-based position of the rightmost occurrence
// of each letter in u (0 when absent); the edge count of build_direct(u).
long long transition_count(const Word& u);

// The automaton with each label replaced by its length: a graph that counts
// from 0 to |Pal(u)| by unique path weights.
struct CountingGraph {
  struct Edge {
    int from;
    long long weight;
    int to;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
  };

  int start = 0;
  int vertex_count = 0;
  std::vector<Edge> edges;  // sorted by (from, weight, to)

  friend bool operator==(const CountingGraph&, const CountingGraph&) = default;
};

CountingGraph counting_graph(const Word& u);

// True iff for every k in 0..n there is exactly one path from the start
// vertex of total weight k (path enumeration).
bool has_unique_path_weights(const CountingGraph& g, long long n);

// |Pal((ab)^n)| == F_{2n+3} - 2 with F_1 = F_2 = 1; n must be in 1..12.
bool fibonacci_length_check(int n);

}  // namespace palclosure
