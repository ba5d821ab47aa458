#include "palclosure/pal.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace palclosure {

namespace {

void push_reduced(std::vector<SignedLetter>& out, SignedLetter s) {
  if (!out.empty() && out.back().cancels(s)) {
    out.pop_back();
  } else {
    out.push_back(s);
  }
}

// Image of the single signed letter x under the action of the single signed
// basis letter s (the automorphism L_s or R_s). Both fix s's letter and its
// inverse; any other letter maps to a two-letter image.
void append_image(std::vector<SignedLetter>& out, Side side, SignedLetter s,
                  SignedLetter x) {
  if (x.letter == s.letter) {
    push_reduced(out, x);
    return;
  }
  const SignedLetter pos{s.letter, 1};
  const SignedLetter neg{s.letter, -1};
  if (side == Side::L) {
    if (s.sign > 0) {
      // L_a(b) = ab, L_a(b^-1) = b^-1 a^-1
      if (x.sign > 0) {
        push_reduced(out, pos);
        push_reduced(out, x);
      } else {
        push_reduced(out, x);
        push_reduced(out, neg);
      }
    } else {
      // L_a^-1(b) = a^-1 b, L_a^-1(b^-1) = b^-1 a
      if (x.sign > 0) {
        push_reduced(out, neg);
        push_reduced(out, x);
      } else {
        push_reduced(out, x);
        push_reduced(out, pos);
      }
    }
  } else {
    if (s.sign > 0) {
      // R_a(b) = ba, R_a(b^-1) = a^-1 b^-1
      if (x.sign > 0) {
        push_reduced(out, x);
        push_reduced(out, pos);
      } else {
        push_reduced(out, neg);
        push_reduced(out, x);
      }
    } else {
      // R_a^-1(b) = b a^-1, R_a^-1(b^-1) = a b^-1
      if (x.sign > 0) {
        push_reduced(out, x);
        push_reduced(out, neg);
      } else {
        push_reduced(out, pos);
        push_reduced(out, x);
      }
    }
  }
}

GroupElement apply_single(Side side, SignedLetter s, const GroupElement& v) {
  std::vector<SignedLetter> out;
  out.reserve(2 * v.letters().size());
  for (const SignedLetter& x : v.letters()) {
    append_image(out, side, s, x);
  }
  return GroupElement(std::move(out));
}

GroupElement apply_basis(Side side, const GroupElement& basis,
                         const GroupElement& v) {
  // alpha_{s1...sk} = alpha_{s1} . ... . alpha_{sk}: apply right to left.
  GroupElement result = v;
  const auto& letters = basis.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    result = apply_single(side, *it, result);
  }
  return result;
}

}  // namespace

GroupElement apply_L(const GroupElement& basis, const GroupElement& v) {
  return apply_basis(Side::L, basis, v);
}

GroupElement apply_R(const GroupElement& basis, const GroupElement& v) {
  return apply_basis(Side::R, basis, v);
}

GroupElement Automorphism::operator()(const GroupElement& v) const {
  return apply_basis(side, basis, v);
}

Word pal_word(const Word& u) {
  Word pal;
  for (char a : u) {
    pal.push_back(a);
    pal = palindromic_closure(pal);
  }
  return pal;
}

Word pal_word_fast(const Word& u) {
  Word pal;
  std::vector<std::size_t> length{0};  // |Pal(prefix)| per prefix
  std::map<char, std::size_t> rightmost;
  for (std::size_t t = 0; t < u.size(); ++t) {
    const char x = u[t];
    const auto seen = rightmost.find(x);
    if (seen == rightmost.end()) {
      // x-free so far: Pal(ux) = Pal(u) x Pal(u)
      const Word copy = pal;
      pal.push_back(x);
      pal += copy;
    } else {
      // u = u1 x u2 with u2 x-free: Pal(ux) = Pal(u) Pal(u1)^-1 Pal(u)
      pal += pal.substr(length[seen->second]);
    }
    length.push_back(pal.size());
    rightmost[x] = t;
  }
  return pal;
}

std::vector<unsigned long long> pal_prefix_lengths(const Word& u) {
  constexpr unsigned long long kMax = 1ull << 62;
  std::vector<unsigned long long> length{0};
  std::map<char, std::size_t> rightmost;
  for (std::size_t t = 0; t < u.size(); ++t) {
    const char x = u[t];
    const unsigned long long current = length.back();
    const auto seen = rightmost.find(x);
    const unsigned long long next = seen == rightmost.end()
                                        ? 2 * current + 1
                                        : current + (current - length[seen->second]);
    if (current >= kMax || next >= kMax) {
      throw std::overflow_error("palindromic closure length overflow");
    }
    length.push_back(next);
    rightmost[x] = t;
  }
  return length;
}

GroupElement pal_group(const GroupElement& u) {
  // Pal(au) = a R_a(Pal(u)) for reduced au, folded from the right.
  GroupElement pal;
  const auto& letters = u.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    pal = GroupElement::generator(it->letter, it->sign) *
          apply_single(Side::R, *it, pal);
  }
  return pal;
}

bool check_justin_R(const GroupElement& u, const GroupElement& v) {
  return pal_group(u * v) == pal_group(u) * apply_R(u, pal_group(v));
}

bool check_justin_L(const GroupElement& u, const GroupElement& v) {
  return pal_group(u * v) == apply_L(u, pal_group(v)) * pal_group(u);
}

SemidirectPair semidirect_multiply(const SemidirectPair& p,
                                   const SemidirectPair& q) {
  return {p.first * apply_R(p.second, q.first), p.second * q.second};
}

SemidirectPair semidirect_delta(const GroupElement& u) {
  return {pal_group(u), u};
}

TransducerStep transducer_step(const TransducerState& s, char a) {
  const GroupElement input = GroupElement::generator(a);
  return {TransducerState{s.directive * input},
          apply_R(s.directive, input).to_word()};
}

Word transducer_run(const Word& input) {
  TransducerState state;
  Word out;
  for (char a : input) {
    TransducerStep step = transducer_step(state, a);
    out += step.output;
    state = std::move(step.state);
  }
  return out;
}

namespace {

// Reduced words of each length in lexicographic order of their signed
// letters, each generator preceding its inverse.
bool enumerate_reduced(const Alphabet& alphabet, int max_len,
                       std::vector<SignedLetter>& current,
                       const std::function<bool(const std::vector<SignedLetter>&)>& fn) {
  if (!fn(current)) return false;
  if (static_cast<int>(current.size()) == max_len) return true;
  for (int i = 0; i < alphabet.size(); ++i) {
    for (int sign : {1, -1}) {
      const SignedLetter s{alphabet.letter(i), sign};
      if (!current.empty() && current.back().cancels(s)) continue;
      current.push_back(s);
      const bool keep_going = enumerate_reduced(alphabet, max_len, current, fn);
      current.pop_back();
      if (!keep_going) return false;
    }
  }
  return true;
}

}  // namespace

std::optional<GroupElement> cocycle_witness_search(const Alphabet& alphabet,
                                                   int max_len) {
  if (max_len < 0) {
    throw std::invalid_argument("search length must be nonnegative");
  }
  // Depth-first generation visits words in prefix order; to search in
  // length-lexicographic order, sweep the lengths one at a time.
  for (int len = 0; len <= max_len; ++len) {
    std::optional<GroupElement> witness;
    std::vector<SignedLetter> current;
    enumerate_reduced(alphabet, len, current,
                      [&](const std::vector<SignedLetter>& raw) {
                        if (static_cast<int>(raw.size()) != len) return true;
                        GroupElement x{std::vector<SignedLetter>(raw)};
                        const GroupElement x_inv = x.inverse();
                        for (char a : alphabet.letters()) {
                          const GroupElement gen = GroupElement::generator(a);
                          if (x_inv * apply_R(gen, x) != gen) return true;
                        }
                        witness = std::move(x);
                        return false;
                      });
    if (witness) return witness;
  }
  return std::nullopt;
}

}  // namespace palclosure
