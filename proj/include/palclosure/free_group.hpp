#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "palclosure/words.hpp"

namespace palclosure {

// One generator or its inverse. Text encoding: lowercase letter for sign +1,
// the matching uppercase letter for sign -1.
struct SignedLetter {
  char letter;
  int sign;  // +1 or -1

  SignedLetter inverse() const { return {letter, -sign}; }
  bool cancels(const SignedLetter& o) const {
    return letter == o.letter && sign == -o.sign;
  }
  char encoded() const {
    return sign > 0 ? letter : static_cast<char>(letter - 'a' + 'A');
  }

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

// Element of the free group as a reduced word over A and A^-1. Reduction is
// performed eagerly at construction; every value of this type is reduced.
class GroupElement {
 public:
  GroupElement() = default;  // identity
  explicit GroupElement(std::vector<SignedLetter> raw);

  // "aB" is a b^-1; "1" and "" both denote the identity.
  static GroupElement parse(std::string_view text);
  static GroupElement generator(char letter, int sign = 1);
  static GroupElement from_word(const Word& w);

  const std::vector<SignedLetter>& letters() const { return letters_; }
  bool is_identity() const { return letters_.empty(); }
  // Number of letters of the reduced word (not the algebraic length).
  int length() const { return static_cast<int>(letters_.size()); }

  GroupElement inverse() const;
  // Letters in opposite order, signs kept. An antimorphism.
  GroupElement reversed() const;
  // Occurrences of the letter counted with sign.
  int degree(char letter) const;
  // Sum of all letter degrees; the length, for a positive word.
  int algebraic_length() const;

  bool is_palindrome() const;
  bool is_positive() const;
  Word to_word() const;  // requires is_positive()

  std::string str() const;  // "1" for the identity

  friend GroupElement operator*(const GroupElement& u, const GroupElement& v);
  GroupElement& operator*=(const GroupElement& v);

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

 private:
  std::vector<SignedLetter> letters_;
};

}  // namespace palclosure
