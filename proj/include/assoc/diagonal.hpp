#pragma once

#include <vector>

#include "assoc/chain.hpp"
#include "assoc/composition.hpp"
#include "assoc/tree.hpp"

namespace assoc {

// One solution of the index system producing a single term of the diagonal
// on the top cell of K_{n+2}.  The indexing is 1-based; the vectors store
// entries 1..p (resp. 1..q) at offsets 0..p-1, and the accessors supply the
// boundary conventions
//   eps_0 = l_(0) = l'_(0) = i_{p+1} = i'_{q+1} = 0,
//   i_0 = i'_0 = eps_{q+1} = l_(p+1) = l'_(q+1) = n+1.
//
// The system, with all sums l_(u) = l_1+...+l_u partial:
//   (1)  1 <= i_j < i_{j-1} <= n+1            (strictly decreasing i's)
//   (2)  1 <= l_j <= n+1 - i_j - l_(j-1)
//   (3)  0 <= i'_k <= min over o'(t_k) < r < k of { i'_r, i_{t_k} - l'_(o'(t_k)) }
//   (4)  l'_k = eps_k - i'_k - l'_(k-1) >= 1
// with {eps_1 < ... < eps_q} = {1..n} minus {i_1..i_p}.
struct DiagonalSolution {
  int n = 0;
  int p = 0;  // number of right-hand operators
  int q = 0;  // number of left-hand operators; p + q = n
  std::vector<int> i, l;    // right indices (i_j, l_j)
  std::vector<int> ip, lp;  // left indices (i'_k, l'_k)
  std::vector<int> eps;     // complement of {i_j} in {1..n}, ascending

  int i_at(int j) const;    // with sentinels i_0, i_{p+1}
  int ip_at(int k) const;   // with sentinels i'_0, i'_{q+1}
  int eps_at(int u) const;  // with sentinels eps_0, eps_{q+1}
  int l_sum(int u) const;   // l_(u), with l_(p+1) = n+1
  int lp_sum(int u) const;  // l'_(u), with l'_(q+1) = n+1
  int o(int u) const;       // max{ r >= 0 : i_r >= eps_u }
  int o_prime(int u) const; // max{ r >= 0 : eps_r <= i_u }
  // min{ r in 1..p+1 : i_r + l_(r) - l_(o(u)) > eps_u > i_r }; 0 when that
  // set is empty, in which case inequality (3) imposes nothing beyond (4).
  int t(int u) const;

  // The operator words the solution denotes, acting on the corolla with
  // n+2 leaves, superscripts consecutive (q_r = r in application order):
  // (i_1,l_1)...(i_p,l_p) on the right, (i'_1,l'_1)...(i'_q,l'_q) on the
  // left.  The right word is a first fundamental form and the left word a
  // second fundamental form of the faces they cut out.
  Word right_word() const;
  Word left_word() const;
};

// Every solution of the system, each exactly once, deterministically
// ordered: p ascending, then depth-first in (i_j, l_j, i'_k).
std::vector<DiagonalSolution> enumerate_solutions(int n);

// Sign of a solution's tensor term.  (-1)^eps with
//
//   eps = sum_k i'_k (l'_k + 1) + sum_j (i_j + j + p + 1) l_j + sigma
//
// where sigma is the factor re-order parity of the left word: the k-th
// left operation bundles a consecutive run of root children into a new
// factor covering an absolute leaf interval [s_k, e_k], and
//
//   sigma = sum over r < k with s_k > e_r of (l'_r - 1)(l'_k - 1),
//
// the Koszul cost (factor dimensions are l'_k - 1) of moving the factors
// from creation order into canonical factor order, in which a factor
// created later but lying further right must come first.  Two factors
// are either disjoint or nested; nested pairs are order-preserving and
// cost nothing.  sigma vanishes for n <= 4; without it the boundary
// compatibility of the diagonal fails from n = 5 onward (first on
// tensor terms whose left factor is ((***)(***)*) in K_7).
int sign_epsilon(const DiagonalSolution& s);

// One term of the diagonal of a top cell.  dim(left)+dim(right) = n.
struct DiagonalTerm {
  Word left;   // second fundamental form
  Word right;  // first fundamental form
  int sign = 1;
};
std::vector<DiagonalTerm> diagonal_terms(int n);

// Diagonal of the top cell T_{n+2} as a tensor chain; memoized, and safe to
// call from several threads.  n = 0 gives T_2 (x) T_2.
const TensorChain& diagonal_top(int n);

// The factor cells of a face, one K_{arity} per internal node, in the order
// of factor_order (leftmost leaf descending, then depth descending, root
// factor last).  Point factors K_2 are retained.
std::vector<NodeInfo> product_decomposition(const Tree& t);

// Multiplicative extension to every face: apply diagonal_top to each factor,
// tensor the results with the Koszul interleaving sign
// (-1)^{sum_{r<s} dim(right_r) dim(left_s)}, and graft the factor trees back
// into faces of the ambient cell.  Linear on chains.
TensorChain diagonal(const Tree& t);
TensorChain diagonal(const Chain& c);

}  // namespace assoc
