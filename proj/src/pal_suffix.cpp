#include "palclosure/pal_suffix.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "palclosure/pal.hpp"

namespace palclosure {

namespace {

std::set<int> range_states(int count) {
  std::set<int> out;
  for (int i = 0; i < count; ++i) {
    out.insert(i);
  }
  return out;
}

// Index of the rightmost occurrence of x in u, or -1.
int rightmost_index(const Word& u, char x) {
  const auto pos = u.rfind(x);
  return pos == Word::npos ? -1 : static_cast<int>(pos);
}

void check_letter(char x) {
  if (x < 'a' || x > 'z') {
    throw std::invalid_argument(std::string("unknown letter '") + x + "'");
  }
}

}  // namespace

PalCompactAutomaton::PalCompactAutomaton(Word directive, Word pal,
                                         std::vector<std::size_t> lengths,
                                         CompactAutomaton automaton)
    : directive_(std::move(directive)),
      pal_(std::move(pal)),
      pal_lengths_(std::move(lengths)),
      automaton_(std::move(automaton)) {}

PalCompactAutomaton build_direct(const Word& u) {
  for (char x : u) {
    check_letter(x);
  }
  Word pal;
  std::vector<std::size_t> length{0};
  std::vector<CompactAutomaton::Edge> edges;
  std::map<char, int> rightmost;
  for (int t = 0; t < static_cast<int>(u.size()); ++t) {
    const char a = u[static_cast<std::size_t>(t)];
    const auto seen = rightmost.find(a);
    const int j = seen == rightmost.end() ? -1 : seen->second;
    if (j < 0) {
      const Word copy = pal;
      pal.push_back(a);
      pal += copy;
    } else {
      pal += pal.substr(length[static_cast<std::size_t>(j)]);
    }
    // Pal(u[0..t]) is a strict extension of Pal(u[0..t)); the edge label into
    // state t+1 is the appended quotient.
    assert(length[static_cast<std::size_t>(t)] < pal.size());
    const Word label = pal.substr(length[static_cast<std::size_t>(t)]);
    length.push_back(pal.size());
    // u = xyaz with y a-free: |x| ranges over j+1 .. t.
    for (int i = j + 1; i <= t; ++i) {
      edges.push_back({i, label, t + 1});
    }
    rightmost[a] = t;
  }
  const int state_count = static_cast<int>(u.size()) + 1;
  CompactAutomaton automaton(range_states(state_count), 0,
                             range_states(state_count), std::move(edges));
  return PalCompactAutomaton(u, std::move(pal), std::move(length),
                             std::move(automaton));
}

PalCompactAutomaton extend(const PalCompactAutomaton& a, char x) {
  check_letter(x);
  const Word& u = a.directive();
  const int j = rightmost_index(u, x);

  Word pal = a.pal();
  if (j < 0) {
    const Word copy = pal;
    pal.push_back(x);
    pal += copy;
  } else {
    pal += pal.substr(a.pal_lengths()[static_cast<std::size_t>(j)]);
  }
  std::vector<std::size_t> length = a.pal_lengths();
  const Word label = pal.substr(length.back());
  length.push_back(pal.size());

  // u = h u2 with u2 the longest x-free suffix: one new edge from each state
  // h p, p a prefix of u2, into the new state.
  const int new_state = static_cast<int>(u.size()) + 1;
  std::vector<CompactAutomaton::Edge> edges = a.automaton().edges();
  for (int i = j + 1; i <= static_cast<int>(u.size()); ++i) {
    edges.push_back({i, label, new_state});
  }
  CompactAutomaton automaton(range_states(new_state + 1), 0,
                             range_states(new_state + 1), std::move(edges));
  return PalCompactAutomaton(u + x, std::move(pal), std::move(length),
                             std::move(automaton));
}

PalCompactAutomaton restrict_to_prefix(const PalCompactAutomaton& a, const Word& p) {
  if (!is_prefix(p, a.directive())) {
    throw std::invalid_argument("\"" + p + "\" is not a prefix of the directive \"" +
                                a.directive() + "\"");
  }
  const int keep = static_cast<int>(p.size());
  std::vector<CompactAutomaton::Edge> edges;
  for (const auto& e : a.automaton().edges()) {
    if (e.to <= keep) edges.push_back(e);  // edges always go forward
  }
  std::vector<std::size_t> length(a.pal_lengths().begin(),
                                  a.pal_lengths().begin() + keep + 1);
  Word pal = a.pal().substr(0, length.back());
  CompactAutomaton automaton(range_states(keep + 1), 0, range_states(keep + 1),
                             std::move(edges));
  return PalCompactAutomaton(p, std::move(pal), std::move(length),
                             std::move(automaton));
}

long long path_count_to_final(const Word& u) {
  const PalCompactAutomaton a = build_direct(u);
  std::vector<long long> count(u.size() + 1, 0);
  count[0] = 1;
  for (const auto& e : a.automaton().edges()) {
    count[static_cast<std::size_t>(e.to)] += count[static_cast<std::size_t>(e.from)];
  }
  return count[u.size()];
}

long long transition_count(const Word& u) {
  long long sum = 0;
  for (char a = 'a'; a <= 'z'; ++a) {
    sum += rightmost_index(u, a) + 1;  // 1-based position, 0 when absent
  }
  return sum;
}

CountingGraph counting_graph(const Word& u) {
  const PalCompactAutomaton a = build_direct(u);
  CountingGraph g;
  g.start = 0;
  g.vertex_count = static_cast<int>(u.size()) + 1;
  for (const auto& e : a.automaton().edges()) {
    g.edges.push_back({e.from, static_cast<long long>(e.label.size()), e.to});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

namespace {

void collect_path_weights(const std::vector<std::vector<std::pair<long long, int>>>& out,
                          int v, long long weight, std::map<long long, long long>& seen) {
  ++seen[weight];
  for (const auto& [w, target] : out[static_cast<std::size_t>(v)]) {
    collect_path_weights(out, target, weight + w, seen);
  }
}

}  // namespace

bool has_unique_path_weights(const CountingGraph& g, long long n) {
  std::vector<std::vector<std::pair<long long, int>>> out(
      static_cast<std::size_t>(g.vertex_count));
  for (const auto& e : g.edges) {
    out[static_cast<std::size_t>(e.from)].push_back({e.weight, e.to});
  }
  std::map<long long, long long> seen;
  collect_path_weights(out, g.start, 0, seen);
  if (static_cast<long long>(seen.size()) != n + 1) return false;
  for (long long k = 0; k <= n; ++k) {
    const auto it = seen.find(k);
    if (it == seen.end() || it->second != 1) return false;
  }
  return true;
}

bool fibonacci_length_check(int n) {
  if (n < 1 || n > 12) {
    throw std::out_of_range("n must be between 1 and 12");
  }
  Word directive;
  for (int i = 0; i < n; ++i) {
    directive += "ab";
  }
  const auto lengths = pal_prefix_lengths(directive);

  // F_1 = F_2 = 1
  unsigned long long prev = 1;
  unsigned long long cur = 1;
  for (int i = 3; i <= 2 * n + 3; ++i) {
    const unsigned long long next = prev + cur;
    prev = cur;
    cur = next;
  }
  return lengths.back() == cur - 2;
}

}  // namespace palclosure
