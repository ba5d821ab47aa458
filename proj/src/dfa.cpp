#include "palclosure/dfa.hpp"

#include <deque>
#include <stdexcept>

#include "palclosure/pal.hpp"

namespace palclosure {

Dfa::Dfa(std::vector<std::map<char, int>> transitions, std::set<int> terminals)
    : next_(std::move(transitions)), terminals_(std::move(terminals)) {
  const int n = static_cast<int>(next_.size());
  if (n == 0) {
    throw std::invalid_argument("automaton needs at least the initial state");
  }
  for (const auto& row : next_) {
    for (const auto& [letter, target] : row) {
      if (target < 0 || target >= n) {
        throw std::invalid_argument("transition target out of range");
      }
    }
  }
  for (int t : terminals_) {
    if (t < 0 || t >= n) {
      throw std::invalid_argument("terminal state out of range");
    }
  }
}

const std::map<char, int>& Dfa::transitions_from(int q) const {
  return next_.at(static_cast<std::size_t>(q));
}

std::optional<int> Dfa::step(int q, char a) const {
  const auto& row = next_.at(static_cast<std::size_t>(q));
  const auto it = row.find(a);
  if (it == row.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Dfa::run(const Word& w) const {
  int q = initial();
  for (char a : w) {
    const auto next = step(q, a);
    if (!next) return std::nullopt;
    q = *next;
  }
  return q;
}

namespace {

// The sets v with av in S, per first letter a, in letter order.
std::map<char, std::set<Word>> split_by_first_letter(const std::set<Word>& s) {
  std::map<char, std::set<Word>> out;
  for (const Word& w : s) {
    if (!w.empty()) out[w[0]].insert(w.substr(1));
  }
  return out;
}

}  // namespace

Dfa minimal_dfa(const std::set<Word>& language) {
  // Breadth-first exploration of the residuals, letters in ascending order;
  // discovery order is the canonical state numbering.
  std::map<std::set<Word>, int> id;
  std::vector<const std::set<Word>*> by_id;
  std::vector<std::map<char, int>> transitions;
  std::deque<int> queue;

  id.emplace(language, 0);
  by_id.push_back(&id.begin()->first);
  transitions.emplace_back();
  queue.push_back(0);

  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (auto& [letter, residual] : split_by_first_letter(*by_id[q])) {
      auto [it, inserted] = id.emplace(std::move(residual), static_cast<int>(id.size()));
      if (inserted) {
        by_id.push_back(&it->first);
        transitions.emplace_back();
        queue.push_back(it->second);
      }
      transitions[static_cast<std::size_t>(q)][letter] = it->second;
    }
  }

  std::set<int> terminals;
  for (const auto& [residual, q] : id) {
    if (residual.count(Word{}) > 0) terminals.insert(q);
  }
  return Dfa(std::move(transitions), std::move(terminals));
}

Dfa suffix_automaton(const Word& w) {
  const std::vector<Word> all = suffixes(w);
  return minimal_dfa(std::set<Word>(all.begin(), all.end()));
}

namespace {

void enumerate_from(const Dfa& dfa, int q, Word& path, std::vector<char>& on_stack,
                    std::set<Word>& out) {
  if (on_stack[static_cast<std::size_t>(q)]) {
    throw std::invalid_argument("automaton has a cycle; language is not finite");
  }
  on_stack[static_cast<std::size_t>(q)] = 1;
  if (dfa.is_terminal(q)) out.insert(path);
  for (const auto& [letter, target] : dfa.transitions_from(q)) {
    path.push_back(letter);
    enumerate_from(dfa, target, path, on_stack, out);
    path.pop_back();
  }
  on_stack[static_cast<std::size_t>(q)] = 0;
}

}  // namespace

std::set<Word> enumerate_language(const Dfa& dfa) {
  std::set<Word> out;
  Word path;
  std::vector<char> on_stack(static_cast<std::size_t>(dfa.state_count()), 0);
  enumerate_from(dfa, dfa.initial(), path, on_stack, out);
  return out;
}

TheoremReport verify_pal_suffix_theorem(const Word& directive) {
  const Word pal = pal_word_fast(directive);
  const Dfa aut = suffix_automaton(pal);

  // (i) |Pal(u)|+1 states, in bijection with the prefixes of Pal(u).
  if (aut.state_count() != static_cast<int>(pal.size()) + 1) {
    return {false, "state count " + std::to_string(aut.state_count()) +
                       " differs from |Pal(u)|+1 for directive \"" + directive +
                       "\""};
  }
  std::set<int> prefix_states;
  std::set<int> palindromic_prefix_states;
  for (const Word& p : prefixes(pal)) {
    const auto q = aut.run(p);
    if (!q) {
      return {false, "prefix \"" + p + "\" of Pal(\"" + directive +
                         "\") is not readable in the automaton"};
    }
    if (!prefix_states.insert(*q).second) {
      return {false, "two prefixes of Pal(\"" + directive +
                         "\") reach state " + std::to_string(*q)};
    }
    if (is_palindrome(p)) palindromic_prefix_states.insert(*q);
  }
  // Injective map over |Pal(u)|+1 prefixes into as many states: a bijection.

  // (ii) terminal states are exactly the palindromic prefixes.
  if (palindromic_prefix_states != aut.terminals()) {
    return {false, "terminals do not match the palindromic prefixes of Pal(\"" +
                       directive + "\")"};
  }

  // (iii) the label of an edge depends only on its end.
  std::map<int, char> incoming;
  for (int q = 0; q < aut.state_count(); ++q) {
    for (const auto& [letter, target] : aut.transitions_from(q)) {
      const auto [it, inserted] = incoming.emplace(target, letter);
      if (!inserted && it->second != letter) {
        return {false, "state " + std::to_string(target) +
                           " has incoming edges labeled '" + it->second +
                           "' and '" + letter + "' for directive \"" + directive +
                           "\""};
      }
    }
  }

  return {true, std::to_string(aut.state_count()) + " states, " +
                    std::to_string(aut.terminals().size()) + " terminals"};
}

}  // namespace palclosure
