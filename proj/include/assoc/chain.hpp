#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "assoc/composition.hpp"
#include "assoc/tree.hpp"

namespace assoc {

// Integer cellular chains.  Terms are kept sorted by tree code with no zero
// coefficients, so equality is plain vector equality.
struct Chain {
  std::vector<std::pair<Tree, long long>> terms;

  void add(const Tree& t, long long c);
  void normalize();
  bool is_zero() const { return terms.empty(); }
  bool operator==(const Chain&) const = default;
};

struct TensorChain {
  std::vector<std::pair<std::pair<Tree, Tree>, long long>> terms;

  void add(const Tree& l, const Tree& r, long long c);
  void normalize();
  bool is_zero() const { return terms.empty(); }
  bool operator==(const TensorChain&) const = default;
};

// The factor blocks (j_q, n_q) of a face, in factor order (root last):
// j_q is the leaf offset of factor q — equivalently its first-form lower
// index — and n_q+2 is its arity.  The root always carries j = 0.
struct Blocks {
  std::vector<std::pair<int, int>> jn;
  bool operator==(const Blocks&) const = default;
};
Blocks blocks_of(const Tree& t);

// Sign bookkeeping for one extra operator d^q_{(i,l)} on a face with the
// given blocks: the new factor is inserted at position beta, and the face
// sign is (-1)^{eps1+eps2} with
//   eps1 = (i+1) l + n_1 + ... + n_{q-1}
//   eps2 = 0 when beta = q, else (l-1)(n_{q-1} + ... + n_beta).
int beta_of(const Blocks& b, int q, int i, int l);
int face_sign(const Blocks& b, int q, int i, int l);  // +1 or -1

// Signed sum of the codimension-1 faces of a single face, and its linear
// extension to chains.  boundary(boundary(x)) vanishes.
Chain boundary(const Tree& t);
Chain boundary(const Chain& c);

// (d (x) 1) + (-1)^{dim left} (1 (x) d) on tensor chains.
TensorChain tensor_boundary(const TensorChain& tc);

}  // namespace assoc
