#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "palclosure/pal.hpp"
#include "palclosure/verify.hpp"
#include "palclosure/words.hpp"

#include "oracles.hpp"

using namespace palclosure;

TEST_CASE("alphabet keeps declared order and rejects bad input") {
  const Alphabet ab("bca");
  CHECK(ab.letters() == "bca");
  CHECK(ab.letter(0) == 'b');
  CHECK(ab.contains('a'));
  CHECK_FALSE(ab.contains('d'));
  CHECK(Alphabet("aab").letters() == "ab");
  CHECK(Alphabet::first_n(3).letters() == "abc");
  CHECK(Alphabet::inferred_from("cabca").letters() == "abc");
  CHECK_THROWS_AS(Alphabet(""), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet("aB"), std::invalid_argument);
  CHECK_THROWS_AS(Alphabet::first_n(0), std::invalid_argument);
}

TEST_CASE("reversal") {
  CHECK(reversed("abc") == "cba");
  CHECK(reversed("") == "");
  CHECK(reversed("aba") == "aba");
  CHECK(reversed(reversed("abca")) == "abca");
}

TEST_CASE("palindrome test") {
  CHECK(is_palindrome("abaaba"));
  CHECK(is_palindrome(""));
  CHECK(is_palindrome("a"));
  CHECK_FALSE(is_palindrome("ab"));
}

TEST_CASE("longest palindromic suffix") {
  CHECK(longest_palindromic_suffix("abaa") == "aa");
  CHECK(longest_palindromic_suffix("") == "");
  CHECK(longest_palindromic_suffix("abaabab") == "bab");
  CHECK(longest_palindromic_suffix("aba") == "aba");
}

TEST_CASE("longest palindromic suffix matches the brute scan") {
  const Alphabet ab("ab");
  for_each_word(ab, 9, [&](const Word& w) {
    CHECK(longest_palindromic_suffix(w) == oracles::brute_longest_palindromic_suffix(w));
    return true;
  });
}

TEST_CASE("palindromic closure of known words") {
  CHECK(palindromic_closure("abaa") == "abaaba");
  CHECK(palindromic_closure("aba") == "aba");
  CHECK(palindromic_closure("ab") == "aba");
  CHECK(palindromic_closure("") == "");
}

TEST_CASE("palindromic closure is the shortest palindrome extension") {
  // Exhaustive against the brute-force enumeration at desk scale.
  for (const std::string& letters : {std::string("ab"), std::string("abc")}) {
    const Alphabet alphabet(letters);
    for_each_word(alphabet, 6, [&](const Word& w) {
      const Word closure = palindromic_closure(w);
      CHECK(is_palindrome(closure));
      CHECK(is_prefix(w, closure));
      const auto brute =
          oracles::shortest_palindrome_with_prefix(w, letters, closure.size());
      REQUIRE(brute.has_value());
      CHECK(*brute == closure);
      // Unique at the minimal length.
      CHECK(oracles::count_palindrome_extensions(w, letters, closure.size()) == 1);
      return true;
    });
  }
}

TEST_CASE("palindromic closure is idempotent") {
  const Alphabet abc("abc");
  for_each_word(abc, 6, [&](const Word& w) {
    const Word once = palindromic_closure(w);
    CHECK(palindromic_closure(once) == once);
    return true;
  });
}

TEST_CASE("left special factors of small words") {
  // Only "" and "a" have two distinct left extensions in abacaba ("aba" is
  // preceded by c alone).
  CHECK(left_special_factors("abacaba") == std::set<Word>{"", "a"});
  CHECK(left_special_factors("aa") == std::set<Word>{});
  // Both letters occur, so the empty factor is left-special.
  CHECK(left_special_factors("ab") == std::set<Word>{""});
  CHECK(left_special_factors("") == std::set<Word>{});
}

TEST_CASE("left special factors match the definition oracle") {
  const Alphabet abc("abc");
  for_each_word(abc, 5, [&](const Word& w) {
    CHECK(left_special_factors(w) == oracles::brute_left_special_factors(w));
    return true;
  });
}

TEST_CASE("left special factors of Pal(u) are prefixes of Pal(u)") {
  for (int size = 1; size <= 3; ++size) {
    const Alphabet alphabet = Alphabet::first_n(size);
    for_each_word(alphabet, 6, [&](const Word& u) {
      const Word pal = pal_word_fast(u);
      for (const Word& f : left_special_factors(pal)) {
        CHECK(is_prefix(f, pal));
      }
      return true;
    });
  }
  // The converse fails: ab is a non-left-special prefix of Pal(ab) = aba.
  CHECK(left_special_factors("aba").count("ab") == 0);
}

TEST_CASE("left special factors of Pal(u) are prefixes, full length-8 sweep") {
  const Alphabet abc("abc");
  for_each_word(abc, 8, [&](const Word& u) {
    CHECK(oracles::left_special_factors_are_prefixes(pal_word_fast(u)));
    return true;
  });
}

TEST_CASE("prefixes, suffixes and prefix test") {
  CHECK(prefixes("ab") == std::vector<Word>{"", "a", "ab"});
  CHECK(suffixes("ab") == std::vector<Word>{"ab", "b", ""});
  CHECK(is_prefix("", "abc"));
  CHECK(is_prefix("ab", "abc"));
  CHECK_FALSE(is_prefix("b", "abc"));
  CHECK_FALSE(is_prefix("abcd", "abc"));
}
