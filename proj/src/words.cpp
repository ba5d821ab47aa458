#include "palclosure/words.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace palclosure {

Alphabet::Alphabet(std::string_view letters) {
  if (letters.empty()) {
    throw std::invalid_argument("alphabet must contain at least one letter");
  }
  for (char a : letters) {
    if (a < 'a' || a > 'z') {
      throw std::invalid_argument(std::string("alphabet letter out of range: '") +
                                  a + "'");
    }
    if (letters_.find(a) == std::string::npos) {
      letters_.push_back(a);
    }
  }
}

Alphabet Alphabet::first_n(int n) {
  if (n < 1 || n > 26) {
    throw std::invalid_argument("alphabet size must be between 1 and 26");
  }
  std::string letters;
  for (int i = 0; i < n; ++i) {
    letters.push_back(static_cast<char>('a' + i));
  }
  return Alphabet(letters);
}

Alphabet Alphabet::inferred_from(const Word& w) {
  std::string distinct;
  for (char a : w) {
    if (distinct.find(a) == std::string::npos) {
      distinct.push_back(a);
    }
  }
  std::sort(distinct.begin(), distinct.end());
  return Alphabet(distinct);
}

bool Alphabet::contains(char a) const {
  return letters_.find(a) != std::string::npos;
}

Word reversed(const Word& w) { return Word(w.rbegin(), w.rend()); }

namespace {

bool palindrome_from(const Word& w, std::size_t begin) {
  std::size_t i = begin;
  std::size_t j = w.size();
  while (i + 1 < j) {
    if (w[i] != w[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

}  // namespace

bool is_palindrome(const Word& w) { return palindrome_from(w, 0); }

Word longest_palindromic_suffix(const Word& w) {
  for (std::size_t begin = 0; begin < w.size(); ++begin) {
    if (palindrome_from(w, begin)) return w.substr(begin);
  }
  return {};
}

Word palindromic_closure(const Word& w) {
  const Word z = longest_palindromic_suffix(w);
  const std::size_t prefix_len = w.size() - z.size();
  Word out = w;
  for (std::size_t i = prefix_len; i-- > 0;) {
    out.push_back(w[i]);
  }
  return out;
}

std::set<Word> left_special_factors(const Word& w) {
  // For the occurrence of a factor at position i > 0, the preceding letter is
  // w[i-1]; the empty factor occurs at every position.
  std::map<Word, std::set<char>> preceding;
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t len = 0; i + len <= n; ++len) {
      preceding[w.substr(i, len)].insert(w[i - 1]);
    }
  }
  std::set<Word> out;
  for (const auto& [factor, letters] : preceding) {
    if (letters.size() >= 2) out.insert(factor);
  }
  return out;
}

std::vector<Word> prefixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t len = 0; len <= w.size(); ++len) {
    out.push_back(w.substr(0, len));
  }
  return out;
}

std::vector<Word> suffixes(const Word& w) {
  std::vector<Word> out;
  out.reserve(w.size() + 1);
  for (std::size_t begin = 0; begin <= w.size(); ++begin) {
    out.push_back(w.substr(begin));
  }
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

}  // namespace palclosure
