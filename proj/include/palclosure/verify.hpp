#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "palclosure/free_group.hpp"
#include "palclosure/words.hpp"

namespace palclosure {

// Outcome of an exhaustive or randomized property sweep. On the first failed
// check the sweep stops and records a counterexample description.
struct SweepResult {
  long long checked = 0;
  bool ok = true;
  std::string failure;

  void fail(std::string message) {
    ok = false;
    failure = std::move(message);
  }
};

// Calls fn on every word over the alphabet with length <= max_len (including
// the empty word), in length-lexicographic order. fn returns false to stop.
void for_each_word(const Alphabet& alphabet, int max_len,
                   const std::function<bool(const Word&)>& fn);

// Number of words the above visits.
long long word_count(const Alphabet& alphabet, int max_len);

// All reduced group elements of length <= max_len, in length-lexicographic
// order (each generator preceding its inverse).
std::vector<GroupElement> all_reduced_elements(const Alphabet& alphabet,
                                               int max_len);

// Number of elements the above returns, without materializing them.
long long reduced_element_count(const Alphabet& alphabet, int max_len);

// Uniform length in 0..max_len, then a uniformly random reduced word of that
// length.
GroupElement random_reduced(std::mt19937& rng, const Alphabet& alphabet,
                            int max_len);

// pal_word == pal_word_fast == transducer_run on every directive.
SweepResult sweep_pal_agreement(const Alphabet& alphabet, int max_len);

// Pal is injective on words: distinct directives have distinct images.
SweepResult sweep_pal_injectivity(const Alphabet& alphabet, int max_len);

// verify_pal_suffix_theorem on every directive.
SweepResult sweep_suffix_theorem(const Alphabet& alphabet, int max_len);

// Justin's formulas (both sides) and palindromicity of Pal on every pair of
// reduced elements of length <= max_len.
SweepResult sweep_justin(const Alphabet& alphabet, int max_len);

// Same checks on random pairs.
SweepResult check_justin_random(const Alphabet& alphabet, int max_len,
                                int pair_count, std::uint32_t seed);

// Cocycle triviality: for a 2-letter alphabet the witness ab
// must be found (and is then verified on random directives); for any other
// size the search must come back empty.
SweepResult check_cocycle(const Alphabet& alphabet, int search_len,
                          int random_count, std::uint32_t seed);

// build_direct(u), reduce_to_minimal(suffix dfa of Pal(u)) and
// minimal_compact(suffixes of Pal(u)) agree canonically on every directive.
SweepResult sweep_compact_routes(const Alphabet& alphabet, int max_len);

// extend(build_direct(u), x) == build_direct(ux) for every directive and
// letter.
SweepResult sweep_extend(const Alphabet& alphabet, int max_len);

// State count |u|+1, edge count = transition_count(u), path count to the
// final state = |Pal(u)| - |Pal(u-)| on every directive.
SweepResult sweep_counts(const Alphabet& alphabet, int max_len);

// Counting graph has exactly one path of each weight 0..|Pal(u)|.
SweepResult sweep_counting_graph(const Alphabet& alphabet, int max_len);

}  // namespace palclosure
