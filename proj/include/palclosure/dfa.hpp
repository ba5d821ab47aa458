#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "palclosure/words.hpp"

namespace palclosure {

// Deterministic letter-labeled automaton with one initial state, a set of
// terminal states and partial transitions. States are 0..n-1 in breadth-first
// order from the initial state (letters in ascending order), so the initial
// state is always 0.
class Dfa {
 public:
  Dfa(std::vector<std::map<char, int>> transitions, std::set<int> terminals);

  int state_count() const { return static_cast<int>(next_.size()); }
  int initial() const { return 0; }
  const std::set<int>& terminals() const { return terminals_; }
  bool is_terminal(int q) const { return terminals_.count(q) > 0; }
  const std::map<char, int>& transitions_from(int q) const;

  std::optional<int> step(int q, char a) const;
  // State reached from the initial state by w, if any.
  std::optional<int> run(const Word& w) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  std::vector<std::map<char, int>> next_;
  std::set<int> terminals_;
};

// Minimal DFA of a finite language: states are the distinct nonempty
// residuals u^-1 L, the initial state is L itself, terminals are the
// residuals containing the empty word.
Dfa minimal_dfa(const std::set<Word>& language);

// Minimal automaton of the set of suffixes of w.
Dfa suffix_automaton(const Word& w);

// All words accepted by an acyclic Dfa; throws on a cycle.
std::set<Word> enumerate_language(const Dfa& dfa);

struct TheoremReport {
  bool passed = true;
  std::string detail;  // first failure, or a short summary on success
};

// Checks, on the suffix automaton of Pal(directive): (i) it has |Pal(u)|+1
// states with the prefix map a bijection, (ii) terminals are exactly the
// palindromic prefixes, (iii) all incoming edges of a state carry the same
// letter.
TheoremReport verify_pal_suffix_theorem(const Word& directive);

}  // namespace palclosure
