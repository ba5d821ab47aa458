#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "palclosure/pal.hpp"
#include "palclosure/pal_suffix.hpp"
#include "palclosure/verify.hpp"

using namespace palclosure;

namespace {

std::multiset<Word> labels_into(const CompactAutomaton& a, int state) {
  std::multiset<Word> out;
  for (const auto& e : a.edges()) {
    if (e.to == state) out.insert(e.label);
  }
  return out;
}

}  // namespace

TEST_CASE("direct construction for abc") {
  const PalCompactAutomaton a = build_direct("abc");
  CHECK(a.pal() == "abacaba");
  CHECK(a.automaton().state_count() == 4);
  CHECK(a.automaton().terminals() == std::set<int>{0, 1, 2, 3});
  CHECK(a.automaton().edge_count() == 6);
  const std::vector<CompactAutomaton::Edge> expected = {
      {0, "a", 1},    {0, "ba", 2},   {0, "caba", 3},
      {1, "ba", 2},   {1, "caba", 3}, {2, "caba", 3},
  };
  CHECK(a.automaton().edges() == expected);
}

TEST_CASE("empty directive gives the one-state automaton") {
  const PalCompactAutomaton a = build_direct("");
  CHECK(a.automaton().state_count() == 1);
  CHECK(a.automaton().edge_count() == 0);
  CHECK(a.pal() == "");
}

TEST_CASE("direct construction for abca adds three abacaba edges") {
  const PalCompactAutomaton a = build_direct("abca");
  CHECK(a.automaton().state_count() == 5);
  CHECK(a.automaton().edge_count() == 9);
  CHECK(labels_into(a.automaton(), 4) ==
        std::multiset<Word>{"abacaba", "abacaba", "abacaba"});
  std::set<int> sources;
  for (const auto& e : a.automaton().edges()) {
    if (e.to == 4) sources.insert(e.from);
  }
  CHECK(sources == std::set<int>{1, 2, 3});  // states a, ab, abc
}

TEST_CASE("edge labels depend only on the target state") {
  for_each_word(Alphabet("abc"), 6, [&](const Word& u) {
    const PalCompactAutomaton a = build_direct(u);
    for (std::size_t w = 1; w <= u.size(); ++w) {
      const Word expected =
          a.pal().substr(a.pal_lengths()[w - 1],
                         a.pal_lengths()[w] - a.pal_lengths()[w - 1]);
      for (const Word& label : labels_into(a.automaton(), static_cast<int>(w))) {
        CHECK(label == expected);
      }
    }
    return true;
  });
}

TEST_CASE("extend is consistent with the direct construction") {
  const PalCompactAutomaton abc = build_direct("abc");
  const PalCompactAutomaton abca = extend(abc, 'a');
  CHECK(abca.automaton() == build_direct("abca").automaton());
  CHECK(abca.pal() == build_direct("abca").pal());

  const PalCompactAutomaton from_empty = extend(build_direct(""), 'a');
  CHECK(from_empty.automaton().edges() ==
        std::vector<CompactAutomaton::Edge>{{0, "a", 1}});

  CHECK_THROWS_AS(extend(abc, '!'), std::invalid_argument);

  const SweepResult sweep = sweep_extend(Alphabet("abc"), 6);
  CHECK(sweep.ok);
  CHECK(sweep.checked == 3 * 1093);
}

TEST_CASE("restriction to a prefix") {
  const PalCompactAutomaton abca = build_direct("abca");
  const PalCompactAutomaton abc = restrict_to_prefix(abca, "abc");
  CHECK(abc.automaton() == build_direct("abc").automaton());
  CHECK(abc.pal() == "abacaba");

  const PalCompactAutomaton empty = restrict_to_prefix(abca, "");
  CHECK(empty.automaton().state_count() == 1);

  CHECK(restrict_to_prefix(build_direct("abab"), "ab").automaton() ==
        build_direct("ab").automaton());

  CHECK_THROWS_AS(restrict_to_prefix(abca, "ba"), std::invalid_argument);
}

TEST_CASE("path counts to the final state") {
  CHECK(path_count_to_final("abc") == 4);
  CHECK(path_count_to_final("") == 1);
  CHECK(path_count_to_final("a") == 1);
}

TEST_CASE("transition counts") {
  CHECK(transition_count("abc") == 6);
  CHECK(transition_count("abca") == 9);
  CHECK(transition_count("") == 0);
}

TEST_CASE("count formulas hold on the full sweep") {
  const SweepResult sweep = sweep_counts(Alphabet("abc"), 6);
  CHECK(sweep.ok);
  CHECK(sweep.checked == 1093);
}

TEST_CASE("oracle equivalence of the three construction routes") {
  for (int size = 2; size <= 3; ++size) {
    const SweepResult sweep = sweep_compact_routes(Alphabet::first_n(size), 5);
    CHECK(sweep.ok);
    if (!sweep.ok) {
      MESSAGE(sweep.failure);
    }
  }
}

TEST_CASE("counting graph of abc") {
  const CountingGraph g = counting_graph("abc");
  CHECK(g.vertex_count == 4);
  const std::vector<CountingGraph::Edge> expected = {
      {0, 1, 1}, {0, 2, 2}, {0, 4, 3}, {1, 2, 2}, {1, 4, 3}, {2, 4, 3},
  };
  CHECK(g.edges == expected);
  CHECK(has_unique_path_weights(g, 7));
  // Path weights: 0, 1, 2, 1+2, 4, 1+4, 2+4, 1+2+4.
}

TEST_CASE("counting graph of the empty and binary directives") {
  const CountingGraph empty = counting_graph("");
  CHECK(empty.vertex_count == 1);
  CHECK(empty.edges.empty());
  CHECK(has_unique_path_weights(empty, 0));

  // The Sturmian case: Pal(ab) = aba, unique weights 0..3.
  const CountingGraph ab = counting_graph("ab");
  CHECK(has_unique_path_weights(ab, 3));
}

TEST_CASE("counting graphs count on the full sweep") {
  const SweepResult sweep = sweep_counting_graph(Alphabet("abc"), 6);
  CHECK(sweep.ok);
  CHECK(sweep.checked == 1093);
}

TEST_CASE("fibonacci growth of Pal((ab)^n)") {
  CHECK(pal_word("ab").size() == 3);          // F_5 - 2
  CHECK(pal_word("abab").size() == 11);       // F_7 - 2
  CHECK(pal_word("ababababab").size() == 231);  // F_13 - 2
  for (int n = 1; n <= 12; ++n) {
    CHECK(fibonacci_length_check(n));
  }
  CHECK_THROWS_AS(fibonacci_length_check(0), std::out_of_range);
  CHECK_THROWS_AS(fibonacci_length_check(13), std::out_of_range);
}

TEST_CASE("pal length table overflow guard") {
  Word huge;
  for (int i = 0; i < 80; ++i) {
    huge += "ab";
  }
  CHECK_THROWS_AS(pal_prefix_lengths(huge), std::overflow_error);
}
