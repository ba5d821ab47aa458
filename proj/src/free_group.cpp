#include "palclosure/free_group.hpp"

#include <algorithm>
#include <stdexcept>

namespace palclosure {

namespace {

void check_letter(char letter) {
  if (letter < 'a' || letter > 'z') {
    throw std::invalid_argument(std::string("generator out of range: '") +
                                letter + "'");
  }
}

}  // namespace

GroupElement::GroupElement(std::vector<SignedLetter> raw) {
  letters_.reserve(raw.size());
  for (const SignedLetter& s : raw) {
    check_letter(s.letter);
    if (s.sign != 1 && s.sign != -1) {
      throw std::invalid_argument("sign must be +1 or -1");
    }
    if (!letters_.empty() && letters_.back().cancels(s)) {
      letters_.pop_back();
    } else {
      letters_.push_back(s);
    }
  }
}

GroupElement GroupElement::parse(std::string_view text) {
  if (text.empty() || text == "1") return GroupElement{};
  std::vector<SignedLetter> raw;
  raw.reserve(text.size());
  for (char c : text) {
    if (c >= 'a' && c <= 'z') {
      raw.push_back({c, 1});
    } else if (c >= 'A' && c <= 'Z') {
      raw.push_back({static_cast<char>(c - 'A' + 'a'), -1});
    } else {
      throw std::invalid_argument(std::string("unknown symbol '") + c +
                                  "' in group element");
    }
  }
  return GroupElement(std::move(raw));
}

GroupElement GroupElement::generator(char letter, int sign) {
  return GroupElement({SignedLetter{letter, sign}});
}

GroupElement GroupElement::from_word(const Word& w) {
  std::vector<SignedLetter> raw;
  raw.reserve(w.size());
  for (char a : w) {
    raw.push_back({a, 1});
  }
  return GroupElement(std::move(raw));
}

GroupElement GroupElement::inverse() const {
  std::vector<SignedLetter> raw;
  raw.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
    raw.push_back(it->inverse());
  }
  return GroupElement(std::move(raw));
}

GroupElement GroupElement::reversed() const {
  // Reversal of a reduced word is reduced: adjacency is preserved.
  return GroupElement(std::vector<SignedLetter>(letters_.rbegin(), letters_.rend()));
}

int GroupElement::degree(char letter) const {
  check_letter(letter);
  int sum = 0;
  for (const SignedLetter& s : letters_) {
    if (s.letter == letter) sum += s.sign;
  }
  return sum;
}

int GroupElement::algebraic_length() const {
  int sum = 0;
  for (const SignedLetter& s : letters_) {
    sum += s.sign;
  }
  return sum;
}

bool GroupElement::is_palindrome() const {
  std::size_t i = 0;
  std::size_t j = letters_.size();
  while (i + 1 < j) {
    if (letters_[i] != letters_[j - 1]) return false;
    ++i;
    --j;
  }
  return true;
}

bool GroupElement::is_positive() const {
  return std::all_of(letters_.begin(), letters_.end(),
                     [](const SignedLetter& s) { return s.sign > 0; });
}

Word GroupElement::to_word() const {
  Word out;
  out.reserve(letters_.size());
  for (const SignedLetter& s : letters_) {
    if (s.sign < 0) {
      throw std::logic_error("group element is not a positive word: " + str());
    }
    out.push_back(s.letter);
  }
  return out;
}

std::string GroupElement::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  out.reserve(letters_.size());
  for (const SignedLetter& s : letters_) {
    out.push_back(s.encoded());
  }
  return out;
}

GroupElement operator*(const GroupElement& u, const GroupElement& v) {
  std::vector<SignedLetter> raw = u.letters_;
  raw.insert(raw.end(), v.letters_.begin(), v.letters_.end());
  return GroupElement(std::move(raw));
}

GroupElement& GroupElement::operator*=(const GroupElement& v) {
  *this = *this * v;
  return *this;
}

}  // namespace palclosure
