#include "palclosure/verify.hpp"

#include <algorithm>
#include <map>

#include "palclosure/compact.hpp"
#include "palclosure/dfa.hpp"
#include "palclosure/pal.hpp"
#include "palclosure/pal_suffix.hpp"

namespace palclosure {

void for_each_word(const Alphabet& alphabet, int max_len,
                   const std::function<bool(const Word&)>& fn) {
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      Word w;
      w.reserve(static_cast<std::size_t>(len));
      for (int d : digits) {
        w.push_back(alphabet.letter(d));
      }
      if (!fn(w)) return;
      // Advance the odometer, most significant digit first.
      int i = len - 1;
      while (i >= 0 && digits[static_cast<std::size_t>(i)] == alphabet.size() - 1) {
        digits[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++digits[static_cast<std::size_t>(i)];
    }
  }
}

long long word_count(const Alphabet& alphabet, int max_len) {
  long long total = 0;
  long long pow = 1;
  for (int len = 0; len <= max_len; ++len) {
    total += pow;
    pow *= alphabet.size();
  }
  return total;
}

namespace {

void collect_reduced(const Alphabet& alphabet, int max_len,
                     std::vector<SignedLetter>& current,
                     std::vector<std::vector<SignedLetter>>& out) {
  out.push_back(current);
  if (static_cast<int>(current.size()) == max_len) return;
  for (int i = 0; i < alphabet.size(); ++i) {
    for (int sign : {1, -1}) {
      const SignedLetter s{alphabet.letter(i), sign};
      if (!current.empty() && current.back().cancels(s)) continue;
      current.push_back(s);
      collect_reduced(alphabet, max_len, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<GroupElement> all_reduced_elements(const Alphabet& alphabet,
                                               int max_len) {
  std::vector<std::vector<SignedLetter>> raw;
  std::vector<SignedLetter> current;
  collect_reduced(alphabet, max_len, current, raw);
  std::stable_sort(raw.begin(), raw.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::vector<GroupElement> out;
  out.reserve(raw.size());
  for (auto& letters : raw) {
    out.emplace_back(std::move(letters));
  }
  return out;
}

long long reduced_element_count(const Alphabet& alphabet, int max_len) {
  // 2k choices for the first letter, 2k-1 for each further one.
  long long total = 1;
  long long of_length = 1;
  for (int len = 1; len <= max_len; ++len) {
    of_length *= len == 1 ? 2LL * alphabet.size() : 2LL * alphabet.size() - 1;
    total += of_length;
    if (total > (1LL << 50)) return total;  // saturate far beyond any bound
  }
  return total;
}

GroupElement random_reduced(std::mt19937& rng, const Alphabet& alphabet,
                            int max_len) {
  std::uniform_int_distribution<int> length_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, alphabet.size() - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  const int len = length_dist(rng);
  std::vector<SignedLetter> letters;
  letters.reserve(static_cast<std::size_t>(len));
  while (static_cast<int>(letters.size()) < len) {
    const SignedLetter s{alphabet.letter(letter_dist(rng)),
                         sign_dist(rng) == 0 ? 1 : -1};
    if (!letters.empty() && letters.back().cancels(s)) continue;
    letters.push_back(s);
  }
  return GroupElement(std::move(letters));
}

SweepResult sweep_pal_agreement(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const Word slow = pal_word(u);
    if (slow != pal_word_fast(u)) {
      result.fail("pal_word and pal_word_fast disagree on \"" + u + "\"");
      return false;
    }
    if (slow != transducer_run(u)) {
      result.fail("transducer output differs from Pal on \"" + u + "\"");
      return false;
    }
    return true;
  });
  return result;
}

SweepResult sweep_pal_injectivity(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  std::map<Word, Word> image;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const auto [it, inserted] = image.emplace(pal_word_fast(u), u);
    if (!inserted) {
      result.fail("Pal maps both \"" + it->second + "\" and \"" + u +
                  "\" to the same word");
      return false;
    }
    return true;
  });
  return result;
}

SweepResult sweep_suffix_theorem(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const TheoremReport report = verify_pal_suffix_theorem(u);
    if (!report.passed) {
      result.fail(report.detail);
      return false;
    }
    return true;
  });
  return result;
}

namespace {

bool justin_pair_ok(const GroupElement& u, const GroupElement& v,
                    std::string& message) {
  if (!check_justin_R(u, v)) {
    message = "Justin's formula (R side) fails for u=" + u.str() + ", v=" + v.str();
    return false;
  }
  if (!check_justin_L(u, v)) {
    message = "Justin's formula (L side) fails for u=" + u.str() + ", v=" + v.str();
    return false;
  }
  if (!pal_group(u * v).is_palindrome()) {
    message = "Pal(" + (u * v).str() + ") is not a palindrome";
    return false;
  }
  return true;
}

}  // namespace

SweepResult sweep_justin(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  const std::vector<GroupElement> elements = all_reduced_elements(alphabet, max_len);
  std::string message;
  for (const GroupElement& u : elements) {
    for (const GroupElement& v : elements) {
      ++result.checked;
      if (!justin_pair_ok(u, v, message)) {
        result.fail(message);
        return result;
      }
    }
  }
  return result;
}

SweepResult check_justin_random(const Alphabet& alphabet, int max_len,
                                int pair_count, std::uint32_t seed) {
  SweepResult result;
  std::mt19937 rng(seed);
  std::string message;
  for (int i = 0; i < pair_count; ++i) {
    const GroupElement u = random_reduced(rng, alphabet, max_len);
    const GroupElement v = random_reduced(rng, alphabet, max_len);
    ++result.checked;
    if (!justin_pair_ok(u, v, message)) {
      result.fail(message);
      return result;
    }
  }
  return result;
}

SweepResult check_cocycle(const Alphabet& alphabet, int search_len,
                          int random_count, std::uint32_t seed) {
  SweepResult result;
  const std::optional<GroupElement> witness =
      cocycle_witness_search(alphabet, search_len);
  ++result.checked;
  if (alphabet.size() == 2) {
    const GroupElement expected =
        GroupElement::parse(std::string{alphabet.letter(0), alphabet.letter(1)});
    if (!witness) {
      result.fail("no cocycle witness found over a 2-letter alphabet");
      return result;
    }
    if (*witness != expected) {
      result.fail("cocycle witness " + witness->str() + " differs from " +
                  expected.str());
      return result;
    }
    // Pal(u) = x^-1 R_u(x) on random directives.
    std::mt19937 rng(seed);
    const GroupElement x_inv = witness->inverse();
    for (int i = 0; i < random_count; ++i) {
      const GroupElement u = random_reduced(rng, alphabet, 8);
      ++result.checked;
      if (pal_group(u) != x_inv * apply_R(u, *witness)) {
        result.fail("Pal(u) != x^-1 R_u(x) for u=" + u.str());
        return result;
      }
    }
  } else if (witness) {
    result.fail("unexpected cocycle witness " + witness->str() + " over " +
                std::to_string(alphabet.size()) + " letters");
  }
  return result;
}

SweepResult sweep_compact_routes(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const Word pal = pal_word_fast(u);
    const std::vector<Word> all = suffixes(pal);
    const std::set<Word> suffix_set(all.begin(), all.end());

    const CompactAutomaton direct = build_direct(u).automaton();
    const CompactAutomaton reduced =
        reduce_to_minimal(CompactAutomaton::from_dfa(minimal_dfa(suffix_set)));
    const CompactAutomaton by_residuals = minimal_compact(suffix_set);

    if (!equivalent(direct, reduced)) {
      result.fail("direct construction differs from the reduced suffix DFA for \"" +
                  u + "\"");
      return false;
    }
    if (!equivalent(direct, by_residuals)) {
      result.fail("direct construction differs from the residual construction for \"" +
                  u + "\"");
      return false;
    }
    return true;
  });
  return result;
}

SweepResult sweep_extend(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    const PalCompactAutomaton base = build_direct(u);
    for (char x : alphabet.letters()) {
      ++result.checked;
      const PalCompactAutomaton extended = extend(base, x);
      const PalCompactAutomaton rebuilt = build_direct(u + x);
      if (extended.automaton() != rebuilt.automaton() ||
          extended.pal() != rebuilt.pal()) {
        result.fail("extend(build_direct(\"" + u + "\"), '" + x +
                    "') differs from build_direct(\"" + u + x + "\")");
        return false;
      }
    }
    return true;
  });
  return result;
}

SweepResult sweep_counts(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const PalCompactAutomaton a = build_direct(u);
    if (a.automaton().state_count() != u.size() + 1) {
      result.fail("state count is not |u|+1 for \"" + u + "\"");
      return false;
    }
    if (static_cast<long long>(a.automaton().edge_count()) != transition_count(u)) {
      result.fail("edge count differs from the rightmost-position sum for \"" + u +
                  "\"");
      return false;
    }
    const auto lengths = a.pal_lengths();
    const long long expected =
        u.empty() ? 1
                  : static_cast<long long>(lengths[u.size()]) -
                        static_cast<long long>(lengths[u.size() - 1]);
    if (path_count_to_final(u) != expected) {
      result.fail("path count to the final state is not |Pal(u)|-|Pal(u-)| for \"" +
                  u + "\"");
      return false;
    }
    return true;
  });
  return result;
}

SweepResult sweep_counting_graph(const Alphabet& alphabet, int max_len) {
  SweepResult result;
  for_each_word(alphabet, max_len, [&](const Word& u) {
    ++result.checked;
    const PalCompactAutomaton a = build_direct(u);
    const CountingGraph g = counting_graph(u);
    if (!has_unique_path_weights(g, static_cast<long long>(a.pal().size()))) {
      result.fail("counting graph of \"" + u +
                  "\" does not count 0..|Pal(u)| by unique paths");
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace palclosure
