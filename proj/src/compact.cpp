#include "palclosure/compact.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace palclosure {

CompactAutomaton::CompactAutomaton(std::set<int> states, int initial,
                                   std::set<int> terminals,
                                   std::vector<Edge> edges)
    : states_(std::move(states)), initial_(initial), terminals_(std::move(terminals)) {
  if (states_.count(initial_) == 0) {
    throw std::invalid_argument("initial state is not a state");
  }
  for (int t : terminals_) {
    if (states_.count(t) == 0) {
      throw std::invalid_argument("terminal state is not a state");
    }
  }
  for (int q : states_) {
    out_[q];
  }
  for (Edge& e : edges) {
    if (e.label.empty()) {
      throw std::invalid_argument("edge labels must be nonempty");
    }
    if (states_.count(e.from) == 0 || states_.count(e.to) == 0) {
      throw std::invalid_argument("edge endpoint is not a state");
    }
    out_[e.from].emplace_back(std::move(e.label), e.to);
  }
  for (auto& [q, row] : out_) {
    std::sort(row.begin(), row.end());
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (row[i].first[0] == row[i - 1].first[0]) {
        throw std::invalid_argument(
            "not deterministic: two labels from state " + std::to_string(q) +
            " begin with '" + row[i].first[0] + "'");
      }
    }
  }
}

CompactAutomaton CompactAutomaton::from_dfa(const Dfa& dfa) {
  std::set<int> states;
  std::vector<Edge> edges;
  for (int q = 0; q < dfa.state_count(); ++q) {
    states.insert(q);
    for (const auto& [letter, target] : dfa.transitions_from(q)) {
      edges.push_back({q, Word(1, letter), target});
    }
  }
  return CompactAutomaton(std::move(states), dfa.initial(), dfa.terminals(),
                          std::move(edges));
}

const std::vector<std::pair<Word, int>>& CompactAutomaton::out(int q) const {
  const auto it = out_.find(q);
  if (it == out_.end()) {
    throw std::invalid_argument("state " + std::to_string(q) + " is not in the automaton");
  }
  return it->second;
}

std::vector<CompactAutomaton::Edge> CompactAutomaton::edges() const {
  std::vector<Edge> out;
  for (const auto& [q, row] : out_) {
    for (const auto& [label, target] : row) {
      out.push_back({q, label, target});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t CompactAutomaton::edge_count() const {
  std::size_t n = 0;
  for (const auto& [q, row] : out_) {
    n += row.size();
  }
  return n;
}

std::set<int> special_states(const CompactAutomaton& a) {
  std::set<int> out = a.terminals();
  out.insert(a.initial());
  for (int q : a.states()) {
    if (a.out(q).size() >= 2) out.insert(q);
  }
  return out;
}

std::vector<SpecialPath> special_paths(const CompactAutomaton& a) {
  if (!is_trim(a)) {
    throw std::invalid_argument("special paths require a trim automaton");
  }
  const std::set<int> special = special_states(a);
  std::vector<SpecialPath> out;
  for (int p : special) {
    for (const auto& [label, first_target] : a.out(p)) {
      Word path_label = label;
      int q = first_target;
      std::size_t steps = 0;
      while (special.count(q) == 0) {
        if (++steps > a.state_count()) {
          throw std::invalid_argument("cycle through non-special states");
        }
        // Trim and non-special: exactly one outgoing edge.
        const auto& row = a.out(q);
        path_label += row[0].first;
        q = row[0].second;
      }
      out.push_back({p, std::move(path_label), q});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

CompactAutomaton elementary_reduction(const CompactAutomaton& a, int q) {
  if (!a.contains(q)) {
    throw std::invalid_argument("state " + std::to_string(q) + " is not in the automaton");
  }
  if (special_states(a).count(q) > 0) {
    throw std::invalid_argument("state " + std::to_string(q) + " is special");
  }
  const auto& row = a.out(q);
  if (row.size() != 1) {
    throw std::invalid_argument("state " + std::to_string(q) +
                                " does not have exactly one outgoing edge");
  }
  const auto& [suffix_label, target] = row[0];
  if (target == q) {
    throw std::invalid_argument("state " + std::to_string(q) + " loops on itself");
  }

  std::set<int> states = a.states();
  states.erase(q);
  std::vector<CompactAutomaton::Edge> edges;
  for (const CompactAutomaton::Edge& e : a.edges()) {
    if (e.from == q) continue;
    if (e.to == q) {
      edges.push_back({e.from, e.label + suffix_label, target});
    } else {
      edges.push_back(e);
    }
  }
  return CompactAutomaton(std::move(states), a.initial(), a.terminals(),
                          std::move(edges));
}

namespace {

// States in topological order, smallest identifier first among ready states.
std::vector<int> topological_order(const CompactAutomaton& a) {
  std::map<int, int> indegree;
  for (int q : a.states()) {
    indegree[q];
  }
  for (const auto& e : a.edges()) {
    ++indegree[e.to];
  }
  std::set<int> ready;
  for (const auto& [q, d] : indegree) {
    if (d == 0) ready.insert(q);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int q = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(q);
    for (const auto& [label, target] : a.out(q)) {
      if (--indegree[target] == 0) ready.insert(target);
    }
  }
  if (order.size() != a.state_count()) {
    throw std::invalid_argument("automaton has a cycle");
  }
  return order;
}

}  // namespace

CompactAutomaton reduce_to_minimal(const CompactAutomaton& a) {
  if (!is_trim(a)) {
    throw std::invalid_argument("reduction requires a trim automaton");
  }
  // Elementary reductions never change which of the remaining states are
  // special, so the set and a topological suppression order can be fixed
  // up front.
  const std::set<int> special = special_states(a);
  CompactAutomaton result = a;
  for (int q : topological_order(a)) {
    if (special.count(q) == 0) {
      result = elementary_reduction(result, q);
    }
  }
  return result;
}

namespace {

std::map<char, std::set<Word>> split_by_first_letter(const std::set<Word>& s) {
  std::map<char, std::set<Word>> out;
  for (const Word& w : s) {
    if (!w.empty()) out[w[0]].insert(w.substr(1));
  }
  return out;
}

bool residual_is_special(const std::set<Word>& residual, const std::set<Word>& language) {
  if (residual == language) return true;             // u = 1
  if (residual.count(Word{}) > 0) return true;       // u in L
  return split_by_first_letter(residual).size() >= 2;
}

}  // namespace

namespace detail {

std::pair<CompactAutomaton, std::map<int, std::set<Word>>>
minimal_compact_with_residuals(const std::set<Word>& language) {
  if (language.empty()) {
    throw std::invalid_argument("minimal compact automaton of the empty language");
  }
  std::map<std::set<Word>, int> id;
  std::vector<const std::set<Word>*> by_id;
  std::vector<CompactAutomaton::Edge> edges;
  std::deque<int> queue;

  id.emplace(language, 0);
  by_id.push_back(&id.begin()->first);
  queue.push_back(0);

  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (auto& [letter, stripped] : split_by_first_letter(*by_id[q])) {
      Word label(1, letter);
      std::set<Word> residual = std::move(stripped);
      while (!residual_is_special(residual, language)) {
        // Non-special: no empty word and a single first letter.
        auto next = split_by_first_letter(residual);
        label.push_back(next.begin()->first);
        residual = std::move(next.begin()->second);
      }
      auto [it, inserted] = id.emplace(std::move(residual), static_cast<int>(id.size()));
      if (inserted) {
        by_id.push_back(&it->first);
        queue.push_back(it->second);
      }
      edges.push_back({q, std::move(label), it->second});
    }
  }

  std::set<int> states;
  std::set<int> terminals;
  std::map<int, std::set<Word>> residuals;
  for (const auto& [residual, q] : id) {
    states.insert(q);
    if (residual.count(Word{}) > 0) terminals.insert(q);
    residuals.emplace(q, residual);
  }
  return {CompactAutomaton(std::move(states), 0, std::move(terminals), std::move(edges)),
          std::move(residuals)};
}

}  // namespace detail

CompactAutomaton minimal_compact(const std::set<Word>& language) {
  return detail::minimal_compact_with_residuals(language).first;
}

namespace {

void enumerate_from(const CompactAutomaton& a, int q, Word& path,
                    std::set<int>& on_stack, std::set<Word>& out) {
  if (!on_stack.insert(q).second) {
    throw std::invalid_argument("automaton has a cycle; language is not finite");
  }
  if (a.is_terminal(q)) out.insert(path);
  for (const auto& [label, target] : a.out(q)) {
    path += label;
    enumerate_from(a, target, path, on_stack, out);
    path.resize(path.size() - label.size());
  }
  on_stack.erase(q);
}

}  // namespace

std::set<Word> enumerate_language(const CompactAutomaton& a) {
  std::set<Word> out;
  Word path;
  std::set<int> on_stack;
  enumerate_from(a, a.initial(), path, on_stack, out);
  return out;
}

namespace {

std::set<int> accessible_states(const CompactAutomaton& a) {
  std::set<int> seen{a.initial()};
  std::deque<int> queue{a.initial()};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& [label, target] : a.out(q)) {
      if (seen.insert(target).second) queue.push_back(target);
    }
  }
  return seen;
}

}  // namespace

bool is_trim(const CompactAutomaton& a) {
  if (accessible_states(a).size() != a.state_count()) return false;

  std::map<int, std::vector<int>> reverse;
  for (const auto& e : a.edges()) {
    reverse[e.to].push_back(e.from);
  }
  std::set<int> coaccessible = a.terminals();
  std::deque<int> queue(coaccessible.begin(), coaccessible.end());
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (int p : reverse[q]) {
      if (coaccessible.insert(p).second) queue.push_back(p);
    }
  }
  return coaccessible.size() == a.state_count();
}

CompactAutomaton canonicalized(const CompactAutomaton& a) {
  std::map<int, int> relabel;
  relabel[a.initial()] = 0;
  std::deque<int> queue{a.initial()};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& [label, target] : a.out(q)) {
      if (relabel.emplace(target, static_cast<int>(relabel.size())).second) {
        queue.push_back(target);
      }
    }
  }
  if (relabel.size() != a.state_count()) {
    throw std::invalid_argument("canonical form requires every state reachable");
  }

  std::set<int> states;
  for (const auto& [old_id, new_id] : relabel) {
    states.insert(new_id);
  }
  std::set<int> terminals;
  for (int t : a.terminals()) {
    terminals.insert(relabel.at(t));
  }
  std::vector<CompactAutomaton::Edge> edges;
  for (const auto& e : a.edges()) {
    edges.push_back({relabel.at(e.from), e.label, relabel.at(e.to)});
  }
  return CompactAutomaton(std::move(states), 0, std::move(terminals), std::move(edges));
}

bool equivalent(const CompactAutomaton& a, const CompactAutomaton& b) {
  return canonicalized(a) == canonicalized(b);
}

namespace {

const std::set<Word>& right_language(const CompactAutomaton& a, int q,
                                     std::map<int, std::set<Word>>& memo) {
  const auto found = memo.find(q);
  if (found != memo.end()) return found->second;
  std::set<Word> lang;
  if (a.is_terminal(q)) lang.insert(Word{});
  for (const auto& [label, target] : a.out(q)) {
    for (const Word& w : right_language(a, target, memo)) {
      lang.insert(label + w);
    }
  }
  return memo.emplace(q, std::move(lang)).first->second;
}

std::set<Word> residual_of(const std::set<Word>& language, const Word& u) {
  std::set<Word> out;
  for (const Word& w : language) {
    if (is_prefix(u, w)) out.insert(w.substr(u.size()));
  }
  return out;
}

// A word reaching each state, breadth-first.
std::map<int, Word> access_words(const CompactAutomaton& a) {
  std::map<int, Word> access{{a.initial(), Word{}}};
  std::deque<int> queue{a.initial()};
  while (!queue.empty()) {
    const int q = queue.front();
    queue.pop_front();
    for (const auto& [label, target] : a.out(q)) {
      if (access.emplace(target, access[q] + label).second) {
        queue.push_back(target);
      }
    }
  }
  return access;
}

}  // namespace

ReductionMap compute_reduction(const CompactAutomaton& a) {
  if (!is_trim(a)) {
    throw std::invalid_argument("computing a reduction requires a trim automaton");
  }
  const std::set<Word> language = enumerate_language(a);
  auto [target, residuals] = detail::minimal_compact_with_residuals(language);

  std::map<std::set<Word>, int> state_of_residual;
  for (const auto& [q, residual] : residuals) {
    state_of_residual.emplace(residual, q);
  }

  const std::set<int> special = special_states(a);
  const std::map<int, Word> access = access_words(a);
  std::map<int, std::set<Word>> memo;
  std::map<int, int> mapping;
  for (int p : special) {
    const std::set<Word>& right = right_language(a, p, memo);
    // Well-definedness: the access word's residual must be the state's right
    // language (any u reaching p yields the same residual).
    if (residual_of(language, access.at(p)) != right) {
      throw std::logic_error("reduction map is not well defined at state " +
                             std::to_string(p));
    }
    const auto it = state_of_residual.find(right);
    if (it == state_of_residual.end()) {
      throw std::logic_error("state " + std::to_string(p) +
                             " maps to a non-special residual");
    }
    mapping[p] = it->second;
  }

  // Condition 1: initial maps to initial.
  if (mapping.at(a.initial()) != target.initial()) {
    throw std::logic_error("reduction does not map initial to initial");
  }
  // Condition 2: terminal iff the image is terminal.
  for (const auto& [p, image] : mapping) {
    if (a.is_terminal(p) != target.is_terminal(image)) {
      throw std::logic_error("reduction breaks terminality at state " +
                             std::to_string(p));
    }
  }
  // Condition 3: for every pair of special states, the special paths p -> q
  // carry exactly the labels of the edges between the images (the special
  // paths of the minimal compact automaton are its edges).
  std::map<std::pair<int, int>, std::set<Word>> source_labels;
  for (const SpecialPath& sp : special_paths(a)) {
    source_labels[{sp.from, sp.to}].insert(sp.label);
  }
  std::map<std::pair<int, int>, std::set<Word>> target_labels;
  for (const auto& e : target.edges()) {
    target_labels[{e.from, e.to}].insert(e.label);
  }
  const std::set<Word> no_labels;
  for (int p : special) {
    for (int q : special) {
      const auto s_it = source_labels.find({p, q});
      const auto t_it = target_labels.find({mapping.at(p), mapping.at(q)});
      const std::set<Word>& s = s_it == source_labels.end() ? no_labels : s_it->second;
      const std::set<Word>& t = t_it == target_labels.end() ? no_labels : t_it->second;
      if (s != t) {
        throw std::logic_error("special paths from " + std::to_string(p) + " to " +
                               std::to_string(q) +
                               " do not correspond under the reduction");
      }
    }
  }
  // Surjectivity onto the states of the minimal compact automaton.
  std::set<int> image;
  for (const auto& [p, q] : mapping) {
    image.insert(q);
  }
  if (image != target.states()) {
    throw std::logic_error("reduction is not surjective");
  }

  return {std::move(mapping), std::move(target)};
}

}  // namespace palclosure
