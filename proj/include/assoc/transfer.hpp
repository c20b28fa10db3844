#pragma once

#include <optional>
#include <utility>

#include "assoc/composition.hpp"
#include "assoc/diagonal.hpp"

namespace assoc {

// A transfer rewrites a face word so that one chosen operator migrates to
// an end of the composition, using only the face relations, so `rewritten`
// always denotes the same face as the input word.  Its superscripts are
// explicit and in general not consecutive.
//
// For right transfers, `pivot` is the extracted first-applied operator
// d^1_{(i,l)}: it exhibits the face as a face of the facet d_{(i,l)} of the
// ambient associahedron, and ranging k over 1..m enumerates the m distinct
// facets containing a codimension-m face.  For left transfers, `pivot` is
// the repositioned last-applied operator.
struct TransferResult {
  Word rewritten;
  FaceOp pivot;
};

// The k-th left/right transfer of a word, 1 <= k <= m = w.ops.size().
// *_first take a word in first fundamental form (type I, consecutive
// superscripts); *_second take second fundamental form (type II).  The
// guards of the three rewrite cases are tested in order and are mutually
// exclusive.  k = m left transfers and k = 1 right transfers return the
// input word unchanged.  Throws std::invalid_argument when k is out of
// range or the word is not in the stated form.
TransferResult left_transfer_first(const Word& w, int k);
TransferResult right_transfer_first(const Word& w, int k);
TransferResult left_transfer_second(const Word& w, int k);
TransferResult right_transfer_second(const Word& w, int k);

// The index z selected for block k and offset m of a tensor-term solution,
// for 1 <= k <= q+1 and 0 <= m < l'_k (block q+1 has width l'_{q+1} =
// n+1-l'_(q)): the right-hand operator (i_z, l_z) paired with leaf offset
// m of left block k when boundary terms are matched across the tensor.
// k = 1 resolves in closed form as z = p+1-i'_1-m; otherwise the algorithm
// walks the descending chain k_1 = k-1, k_{j+1} = o'(t_{k_j}) until an
// operator matches.  Throws std::invalid_argument on a bad (k, m) and
// std::logic_error if the walk fails to descend or terminate, which no
// solution of the constraint system triggers.
int selection_z(const DiagonalSolution& s, int k, int m);

// The five properties that pin down the selected z; `all()` is the
// correctness statement for selection_z.  `tight_case` is conditional:
// whenever t_k != 0 and i'_k+m exceeds the minimum of i_{t_k}-l'_(o'(t_k))
// and the i'_r with o'(t_k) < r < k, it requires z < t_k with the span
// equality i_z+l_(z)-l_(o(k)) = eps_k, o(k) = max{r < z : i_r >
// i_z+l_(z)-l_(r)}, and o'(z) = max{r < k : i'_r < i'_k+m}; it holds
// vacuously otherwise.
struct SelectionCheck {
  int z = 0;
  bool above_o = false;         // z > o(k)
  bool span_reaches = false;    // i_z + l_(z) - l_(o(k)) >= eps_k
  bool pivot_equality = false;  // i'_k + m == i_z - l'_(o'(z))
  bool between_bound = false;   // o'(z) < r < k  implies  i'_k + m <= i'_r
  bool tight_case = false;
  bool all() const {
    return above_o && span_reaches && pivot_equality && between_bound &&
           tight_case;
  }
};
SelectionCheck selection_check(const DiagonalSolution& s, int k, int m);

// The same properties evaluated at an arbitrary candidate z in 1..p+1;
// selection_z returns the unique candidate for which all() holds.
SelectionCheck selection_check_at(const DiagonalSolution& s, int k, int m,
                                  int z);

// The (i, l) of a facet operator d_{(i,l)} whose facet contains both the
// face given by `first` (in first fundamental form) and the face given by
// `second` (in second fundamental form); std::nullopt when no facet
// contains both.  When several do, the one reached by the smallest right
// transfer index of `first` is returned.  Both words must share the same
// ambient corolla.
std::optional<std::pair<int, int>> common_facet(const Word& first,
                                                const Word& second);

}  // namespace assoc
