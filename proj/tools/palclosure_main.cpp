// Command-line front end: palindromization, automata construction and the
// exhaustive verification sweeps. Graph output goes to stdout, diagnostics to
// stderr; identical invocations produce byte-identical output.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "palclosure/compact.hpp"
#include "palclosure/dfa.hpp"
#include "palclosure/free_group.hpp"
#include "palclosure/pal.hpp"
#include "palclosure/pal_suffix.hpp"
#include "palclosure/serialize.hpp"
#include "palclosure/verify.hpp"
#include "palclosure/words.hpp"

namespace {

using namespace palclosure;

constexpr long long kDefaultPalGuard = 10'000'000;
constexpr std::uint32_t kSweepSeed = 0x5eed;
constexpr long long kMaxSweepItems = 1'000'000;

// Letters must be lowercase and, when an alphabet is declared, members of it.
Word parse_word(const std::string& input, const std::optional<Alphabet>& alphabet) {
  for (char c : input) {
    if (c < 'a' || c > 'z') {
      throw std::invalid_argument(std::string("unknown symbol '") + c +
                                  "' in word input");
    }
    if (alphabet && !alphabet->contains(c)) {
      throw std::invalid_argument(std::string("symbol '") + c +
                                  "' is not in the declared alphabet");
    }
  }
  return input;
}

GroupElement parse_group(const std::string& input,
                         const std::optional<Alphabet>& alphabet) {
  const GroupElement element = GroupElement::parse(input);
  if (alphabet) {
    for (const SignedLetter& s : element.letters()) {
      if (!alphabet->contains(s.letter)) {
        throw std::invalid_argument(std::string("symbol '") + s.letter +
                                    "' is not in the declared alphabet");
      }
    }
  }
  return element;
}

std::optional<Alphabet> declared_alphabet(const std::string& letters) {
  if (letters.empty()) return std::nullopt;
  return Alphabet(letters);
}

void enforce_pal_guard(const Word& directive, long long guard) {
  const auto lengths = pal_prefix_lengths(directive);
  if (static_cast<long long>(lengths.back()) > guard) {
    throw std::invalid_argument(
        "refusing to materialize Pal of length " + std::to_string(lengths.back()) +
        " (guard " + std::to_string(guard) + "; raise --max-pal-length to override)");
  }
}

int run_pal(const std::string& input, bool group_mode, const std::string& alphabet,
            long long guard) {
  const auto declared = declared_alphabet(alphabet);
  if (group_mode) {
    std::cout << pal_group(parse_group(input, declared)).str() << "\n";
  } else {
    const Word directive = parse_word(input, declared);
    enforce_pal_guard(directive, guard);
    std::cout << pal_word_fast(directive) << "\n";
  }
  return 0;
}

int run_closure(const std::string& input, const std::string& alphabet) {
  std::cout << palindromic_closure(parse_word(input, declared_alphabet(alphabet)))
            << "\n";
  return 0;
}

int run_automaton(const std::string& input, const std::string& kind,
                  const std::string& format, const std::string& alphabet,
                  long long guard) {
  const Word directive = parse_word(input, declared_alphabet(alphabet));
  if (kind == "suffix") {
    enforce_pal_guard(directive, guard);
    const Dfa aut = suffix_automaton(pal_word_fast(directive));
    std::cout << (format == "json"  ? to_json(aut)
                  : format == "dot" ? to_dot(aut)
                                    : to_text(aut));
  } else if (kind == "compact") {
    enforce_pal_guard(directive, guard);
    const CompactAutomaton aut = build_direct(directive).automaton();
    std::cout << (format == "json"  ? to_json(aut)
                  : format == "dot" ? to_dot(aut)
                                    : to_text(aut));
  } else {
    enforce_pal_guard(directive, guard);
    const CountingGraph graph = counting_graph(directive);
    std::cout << (format == "json"  ? to_json(graph)
                  : format == "dot" ? to_dot(graph)
                                    : to_text(graph));
  }
  return 0;
}

struct NamedSweep {
  std::string name;
  SweepResult result;
};

int run_verify(const std::string& scope, int max_len, int alphabet_size,
               int search_len) {
  const Alphabet alphabet = Alphabet::first_n(alphabet_size);
  std::vector<NamedSweep> sweeps;

  const bool all = scope == "all";
  if (all || scope == "justin") {
    const long long elements = reduced_element_count(alphabet, max_len);
    if (elements > kMaxSweepItems / elements) {
      throw std::invalid_argument(
          "sweep would check " + std::to_string(elements) + "^2 pairs; the bound is " +
          std::to_string(kMaxSweepItems));
    }
    sweeps.push_back({"justin pairs", sweep_justin(alphabet, max_len)});
    sweeps.push_back(
        {"cocycle witness", check_cocycle(alphabet, search_len, 1000, kSweepSeed)});
  }
  if (all || scope == "suffix-theorem" || scope == "compact" || scope == "counts") {
    if (word_count(alphabet, max_len) > kMaxSweepItems) {
      throw std::invalid_argument(
          "sweep would check " + std::to_string(word_count(alphabet, max_len)) +
          " directives; the bound is " + std::to_string(kMaxSweepItems));
    }
  }
  if (all || scope == "suffix-theorem") {
    sweeps.push_back({"suffix theorem", sweep_suffix_theorem(alphabet, max_len)});
  }
  if (all || scope == "compact") {
    sweeps.push_back({"compact routes", sweep_compact_routes(alphabet, max_len)});
    sweeps.push_back({"incremental extension", sweep_extend(alphabet, max_len)});
  }
  if (all || scope == "counts") {
    sweeps.push_back({"count formulas", sweep_counts(alphabet, max_len)});
    sweeps.push_back({"counting graph", sweep_counting_graph(alphabet, max_len)});
  }

  bool ok = true;
  for (const NamedSweep& sweep : sweeps) {
    if (sweep.result.ok) {
      std::cout << sweep.name << ": ok (" << sweep.result.checked << " checked)\n";
    } else {
      ok = false;
      std::cout << sweep.name << ": FAIL after " << sweep.result.checked
                << " checks: " << sweep.result.failure << "\n";
    }
  }
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterated palindromic closure and the suffix automata of Pal(u)"};
  app.require_subcommand(1);

  std::string input;
  std::string alphabet_letters;
  bool group_mode = false;
  long long pal_guard = kDefaultPalGuard;

  CLI::App* pal = app.add_subcommand("pal", "Image under Pal");
  pal->add_option("input", input, "Directive word, or group element with --group")
      ->required();
  pal->add_flag("--group", group_mode,
                "Treat the input as a free-group element (uppercase = inverse)");
  pal->add_option("--alphabet", alphabet_letters, "Declared alphabet letters");
  pal->add_option("--max-pal-length", pal_guard, "Guard on |Pal(u)|")
      ->capture_default_str();

  CLI::App* closure = app.add_subcommand("closure", "Single palindromic closure");
  closure->add_option("input", input, "Word")->required();
  closure->add_option("--alphabet", alphabet_letters, "Declared alphabet letters");

  std::string kind = "suffix";
  std::string format = "text";
  CLI::App* automaton =
      app.add_subcommand("automaton", "Automata derived from Pal(directive)");
  automaton->add_option("directive", input, "Directive word")->required();
  automaton->add_option("--kind", kind, "suffix, compact or counting")
      ->check(CLI::IsMember({"suffix", "compact", "counting"}))
      ->capture_default_str();
  automaton->add_option("--format", format, "text, dot or json")
      ->check(CLI::IsMember({"text", "dot", "json"}))
      ->capture_default_str();
  automaton->add_option("--alphabet", alphabet_letters, "Declared alphabet letters");
  automaton->add_option("--max-pal-length", pal_guard, "Guard on |Pal(u)|")
      ->capture_default_str();

  std::string scope = "all";
  int max_len = 4;
  int alphabet_size = 3;
  int search_len = 6;
  CLI::App* verify = app.add_subcommand("verify", "Exhaustive property sweeps");
  verify->add_option("--scope", scope, "Property suite to run")
      ->check(CLI::IsMember({"all", "justin", "suffix-theorem", "compact", "counts"}))
      ->capture_default_str();
  verify->add_option("--max-len", max_len, "Maximum directive/element length")
      ->check(CLI::Range(0, 16))
      ->capture_default_str();
  verify->add_option("--alphabet", alphabet_size, "Alphabet size")
      ->check(CLI::Range(1, 4))
      ->capture_default_str();
  verify->add_option("--search-len", search_len, "Cocycle witness search length")
      ->check(CLI::Range(0, 12))
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (pal->parsed()) {
      return run_pal(input, group_mode, alphabet_letters, pal_guard);
    }
    if (closure->parsed()) {
      return run_closure(input, alphabet_letters);
    }
    if (automaton->parsed()) {
      return run_automaton(input, kind, format, alphabet_letters, pal_guard);
    }
    return run_verify(scope, max_len, alphabet_size, search_len);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  }
}
