#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace palclosure {

// Letters are single characters 'a'..'z'; a word is a plain letter sequence.
// The empty word is the monoid identity.
using Word = std::string;

// Ordered set of distinct letters. The order is fixed at construction and is
// the order used wherever a deterministic letter sweep is needed.
class Alphabet {
 public:
  explicit Alphabet(std::string_view letters);

  // {'a', 'b', ...} of the requested size.
  static Alphabet first_n(int n);
  // Distinct letters of w in sorted order.
  static Alphabet inferred_from(const Word& w);

  int size() const { return static_cast<int>(letters_.size()); }
  const std::string& letters() const { return letters_; }
  char letter(int i) const { return letters_.at(static_cast<size_t>(i)); }
  bool contains(char a) const;

 private:
  std::string letters_;
};

Word reversed(const Word& w);
bool is_palindrome(const Word& w);

// Longest suffix of w that is a palindrome; nonempty whenever w is.
// Naive quadratic scan.
Word longest_palindromic_suffix(const Word& w);

// The unique shortest palindrome having w as a prefix: with w = yz and z the
// longest palindromic suffix, the closure is y z y-reversed.
Word palindromic_closure(const Word& w);

// Factors of w preceded, over all their occurrences, by at least two distinct
// letters. The empty factor qualifies iff w contains two distinct letters.
std::set<Word> left_special_factors(const Word& w);

std::vector<Word> prefixes(const Word& w);  // includes "" and w
std::vector<Word> suffixes(const Word& w);  // includes "" and w
bool is_prefix(const Word& p, const Word& w);

}  // namespace palclosure
