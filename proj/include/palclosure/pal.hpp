#pragma once

#include <optional>
#include <vector>

#include "palclosure/free_group.hpp"
#include "palclosure/words.hpp"

namespace palclosure {

// The elementary automorphisms of FG(A): L_a fixes a and maps b to ab for
// b != a; R_a(b) is the reversal of L_a(b). A basis element u acts through
// composition of its letters' actions, L_uv = L_u . L_v (same for R), with
// inverse letters acting by the inverse automorphism.
GroupElement apply_L(const GroupElement& basis, const GroupElement& v);
GroupElement apply_R(const GroupElement& basis, const GroupElement& v);

enum class Side { L, R };

struct Automorphism {
  GroupElement basis;
  Side side = Side::R;

  GroupElement operator()(const GroupElement& v) const;
};

// Iterated palindromic closure: Pal(1) = 1, Pal(wa) = (Pal(w)a)^(+),
// computed by repeatedly taking closures.
Word pal_word(const Word& u);

// Same map computed letter by letter through the table of palindromic-prefix
// lengths, avoiding the palindromic-suffix scan.
Word pal_word_fast(const Word& u);

// |Pal(p)| for every prefix p of u (index = |p|), without materializing Pal.
// Throws std::overflow_error when a length would exceed 2^62.
std::vector<unsigned long long> pal_prefix_lengths(const Word& u);

// Extension of Pal to the free group: Pal(1) = 1 and Pal(au) = a R_a(Pal(u))
// for reduced au. Agrees with pal_word on positive words; not injective.
GroupElement pal_group(const GroupElement& u);

// Pal(uv) == Pal(u) R_u(Pal(v))
bool check_justin_R(const GroupElement& u, const GroupElement& v);
// Pal(uv) == L_u(Pal(v)) Pal(u)
bool check_justin_L(const GroupElement& u, const GroupElement& v);

// Pair in the semidirect product FG(A) *_R FG(A).
struct SemidirectPair {
  GroupElement first;
  GroupElement second;

  friend bool operator==(const SemidirectPair&, const SemidirectPair&) = default;
};

// (u, v)(r, s) = (u R_v(r), v s)
SemidirectPair semidirect_multiply(const SemidirectPair& p, const SemidirectPair& q);
// The morphism u -> (Pal(u), u).
SemidirectPair semidirect_delta(const GroupElement& u);

// Sequential transducer computing Pal: state R_u moves to R_ua on input a and
// emits R_u(a). States are explicit values; no hidden mutation.
struct TransducerState {
  GroupElement directive;  // the u of R_u; initial state is the identity
};

struct TransducerStep {
  TransducerState state;
  Word output;
};

TransducerStep transducer_step(const TransducerState& s, char a);
// Concatenated emissions over the whole input, starting from R_1; equals
// pal_word(input).
Word transducer_run(const Word& input);

// Searches reduced x with at most max_len letters for one with
// a = x^-1 R_a(x) for every generator a, i.e. a witness that the cocycle Pal
// is trivial. Enumeration is length-lexicographic, ties broken by alphabet
// order with each generator preceding its inverse. Returns the first witness
// found, if any.
std::optional<GroupElement> cocycle_witness_search(const Alphabet& alphabet,
                                                   int max_len);

}  // namespace palclosure
