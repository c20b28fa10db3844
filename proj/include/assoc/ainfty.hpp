#pragma once

#include <string>
#include <utility>
#include <vector>

#include "assoc/composition.hpp"

namespace assoc {

// Symbolic calculus of higher (co)multiplication operators.  A face of the
// associahedron K_L with m internal splits is decorated either by a
// coalgebra composite of comultiplications ψ^k : A -> A^(x)k or by the
// mirrored algebra composite of multiplications φ^k : A^(x)k -> A; both
// carry degree k-2 and are positioned inside larger tensor words by a left
// and right offset.  On top of the composites sit the quadratic relation
// sums and the tensor-product operations Ψ^n, Φ^n produced term by term
// from the diagonal of K_n.

enum class OpKind { algebra, coalgebra };
enum class TensorSide { first, second };

struct OpSymbol {
  TensorSide side = TensorSide::first;
  OpKind kind = OpKind::coalgebra;
  int arity = 1;  // k >= 1
  int degree() const { return arity - 2; }
  bool operator==(const OpSymbol&) const = default;
};

// An operator inside a tensor word: 1^(x)left (x) op (x) 1^(x)right.
struct PositionedOp {
  OpSymbol symbol;
  int left = 0;
  int right = 0;
  bool operator==(const PositionedOp&) const = default;
};

// A composite of positioned operators in display order: the leftmost entry
// is applied last, mirroring how face words print.  Empty = identity.
using Composite = std::vector<PositionedOp>;

// One term of a formal sum: an integer coefficient and a composite for each
// tensor side.  Single-module expressions only use `first`; an empty
// composite on a used side is the identity.
struct OpTerm {
  int coeff = 1;
  Composite first;
  Composite second;
  bool operator==(const OpTerm&) const = default;
};

// A formal integer combination of composites, optionally living on a tensor
// product of two modules (then each term has two sides and, for n >= 2, the
// whole sum is conjugated by the interleaving permutation sigma).
struct OpExpr {
  OpKind kind = OpKind::coalgebra;
  bool tensor = false;
  bool sigma = false;
  int n = 0;             // arity label of the operation or relation
  int input_arity = 1;   // tensor slots consumed
  int output_arity = 1;  // tensor slots produced
  std::vector<OpTerm> terms;
};

// Quadratic relation sums.  algebra_relation(n) is
//   sum_{l=0..n-1} sum_{i=0..n-l-1} (-1)^{l(i+1)}
//       φ^{n-l} ( 1^i (x) φ^{l+1} (x) 1^{n-l-1-i} )
// and coalgebra_relation(n) the mirrored
//   sum (-1)^{l(n+i+1)} ( 1^i (x) ψ^{l+1} (x) 1^{n-l-1-i} ) ψ^{n-l},
// each with n(n+1)/2 terms ordered by (l, i), all of degree n-3.
OpExpr algebra_relation(int n);
OpExpr coalgebra_relation(int n);

// Decoration of a face word (consecutive superscripts q_r = r required).
// The coalgebra composite lists, in display order, one ψ^{l_r+1} at offsets
// (i_r, j_r) per operator, root ψ^{L-sum l} last; applying the composite to
// a single slot reproduces the splits of the word in application order.
// The algebra composite is the exact reverse with φ symbols and the same
// offsets, carrying the parity twist (-1)^{L(m+1)} for a word with m
// operators on ambient L, returned as the leading coefficient.
Composite coalgebra_decoration(const Word& w,
                               TensorSide side = TensorSide::first);
std::pair<int, Composite> algebra_decoration(
    const Word& w, TensorSide side = TensorSide::first);

// The induced operations on a tensor product A (x) B: one term per diagonal
// term of K_n, the left factor decorating side A and the right factor side
// B.  Arity 1 is the Leibniz sum ψ^1 (x) 1 + 1 (x) ψ^1 (no interleaving);
// the algebra family carries the extra per-side twists of the mirrored
// decoration.  Every term has degree n-2.
OpExpr tensor_coalgebra_ops(int n);
OpExpr tensor_algebra_ops(int n);

int degree(const Composite& c);
int term_degree(const OpTerm& t);
bool is_homogeneous(const OpExpr& e);

// Rendering: "ψ^k" / "φ^k", with the left offset as subscript whenever the
// composite has at least two factors ("ψ^2_1 ψ^3_0"); identity prints "1";
// tensor terms join sides with " ⊗ "; expressions list signed terms and
// wrap interleaved sums in "σ_{n,2}(...)" (coalgebra) or "σ_{2,n}(...)"
// (algebra).
std::string to_string(const PositionedOp& op, bool with_offset);
std::string to_string(const Composite& c);
std::string to_string(const OpTerm& t, bool tensor = true);
std::string to_string(const OpExpr& e);

}  // namespace assoc
