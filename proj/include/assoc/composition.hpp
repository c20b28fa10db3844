#pragma once

#include <optional>
#include <string>
#include <vector>

#include "assoc/tree.hpp"

namespace assoc {

// One face operator d^q_{(i,l)}: an (i,l)-surgery performed on the q-th
// factor (1-based) of the cell it is applied to.  Applying it splits that
// factor in place: the new block becomes factor q, the shrunken block moves
// to q+1, and later factors shift up.
struct FaceOp {
  int q = 1;
  int i = 0;
  int l = 1;
  bool operator==(const FaceOp&) const = default;
};

// A composition of face operators acting on the corolla with `ambient`
// leaves.  ops[0] is applied first; display order is the reverse, so the
// composition prints right-to-left like d^2_{(1,1)} d^1_{(2,1)}.
struct Word {
  int ambient = 2;
  std::vector<FaceOp> ops;
  bool operator==(const Word&) const = default;
};

// Evaluation under positional semantics: each operator must address an
// existing factor and satisfy 0 <= i <= n_q, 1 <= l <= n_q, i+l <= n_q+1
// against that factor's arity n_q+2.  try_evaluate is total; evaluate throws.
std::optional<Tree> try_evaluate(const Word& w);
Tree evaluate(const Word& w);
bool is_admissible(const Word& w);

// The two canonical presentations of a face as successive root surgeries
// (all superscripts consecutive: q_r = r).  The lower indices form a type I
// sequence (i_1 >= i_2 >= ...) for the first form and a type II sequence
// (i_k <= i_{k+1} + l_{k+1}) for the second.
enum class Form { first, second };
Word canonical_word(const Tree& t, Form form);
Word first_form(const Tree& t);
Word second_form(const Tree& t);

// Form predicates on words with consecutive superscripts.
bool has_consecutive_superscripts(const Word& w);
bool is_type1(const Word& w);
bool is_type2(const Word& w);

// Sum of the l-indices l_1 + ... + l_u (partial blocks absorbed).
int l_partial(const Word& w, int u);

// normalize_* return the canonical word of the face the input denotes.
// Total on admissible words; rewriting-based paths are in rewrite.hpp.
Word normalize_first(const Word& w);
Word normalize_second(const Word& w);

// Rendering and parsing of operator notation.  Text form writes each
// operator as d_(i,l) or d^q_(i,l) (superscripts printed only when some
// superscript breaks the consecutive convention), leftmost = applied last.
// The empty composition renders as "1".  parse accepts that shape plus the
// LaTeX variant d^{q}_{(i,l)} / d_{(i,l)}; missing superscripts are filled
// in as q_r = r in application order.
std::string to_string(const Word& w);
std::string to_latex(const Word& w);
Word word_from_string(std::string_view s, int ambient);

}  // namespace assoc
