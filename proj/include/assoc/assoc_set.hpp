#pragma once

// Multiplicative resolutions of free associahedral sets.
//
// A cell is a canonical word: a generator, a fundamental-form word of face
// operators applied to it, and a canonical list of degeneracy operators
// applied outermost.  Faces pushed through degeneracies are normalized with
// the level-wise simplicial-style relation table; the four unit rows
// annihilate a face against the degeneracy that created its direction.
//
// Every nondegenerate cell of the free set on one generator of dimension n
// corresponds to a planar rooted tree with n+2 leaves, and the normalized
// chain complex of the set reproduces the cellular chains on the
// associahedron K_{n+2} together with its diagonal.

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "assoc/chain.hpp"
#include "assoc/composition.hpp"
#include "assoc/tree.hpp"

namespace assoc {

// A degeneracy operator s^q_j acting on level q.  Stored symbolically: a
// canonical word may carry a degeneracy whose level or slot lies outside
// the range of the underlying face word, when normalization strands it
// behind an annihilated face.  Such cells are degenerate and carry no
// multi-index.
struct DegOp {
  int q = 1;
  int j = 1;
  bool operator==(const DegOp&) const = default;
};

// A cell of a free associahedral set in canonical form: degeneracies
// (outermost, in canonical order) applied after a fundamental-form face
// word applied to one generator.
struct SetCell {
  int generator = 0;
  Word faces;
  std::vector<DegOp> degs;
  bool operator==(const SetCell&) const = default;
};

// Strict total order on cells: by generator, then face word, then
// degeneracy list.
bool cell_less(const SetCell& a, const SetCell& b);

// Render a cell as operators applied left-to-right onto its generator,
// e.g. "s^2_1 d_(0,2) g0".
std::string to_string(const SetCell& c);

// --- multi-indices ---------------------------------------------------------

// A multi-index ((j_1,n_1),...,(j_{k+1},n_{k+1})) is valid when
// n >= j_1 >= ... >= j_{k+1} = 0 and every n_q >= 0, where n = k + sum n_q
// is the dimension of the ambient generator.
bool is_valid_multi_index(const Blocks& b);

// Number of levels below the top one (k in ((j_1,n_1),...,(j_{k+1},n_{k+1}))).
int multi_index_k(const Blocks& b);

// Dimension of the cell the index names: sum of the n_q.
int multi_index_dim(const Blocks& b);

// Dimension of the ambient generator: k + sum of the n_q.
int multi_index_n(const Blocks& b);

// Index of the target of face d^q_{(i,l)}: level q splits, the bundled
// part (j(q,beta), l-1) is inserted at the monotone position beta, and the
// residue (j_q, n_q - l) stays behind.  Throws std::out_of_range when
// (q,i,l) is not a face of b.
Blocks face_target_index(const Blocks& b, int q, int i, int l);

// Index of the target of degeneracy s^q_j: level q grows by one.  Throws
// std::out_of_range when q or j is out of range (1 <= j <= n_q + 3).
Blocks degeneracy_target_index(const Blocks& b, int q, int j);

// Fold a face word to the multi-index of its value, starting from the
// one-level index ((0, ambient-2)).  Throws std::out_of_range when some
// operator leaves the valid range.
Blocks word_index(const Word& w);

// --- free associahedral sets ------------------------------------------------

// The free associahedral set on one generator per listed dimension.
struct FreeAssocSet {
  std::vector<int> generator_dims;
};

// The top cell of generator g.  Throws std::invalid_argument when g is out
// of range.
SetCell generator_cell(const FreeAssocSet& s, int g);

// The nondegenerate cell of generator g named by a tree with
// generator_dims[g] + 2 leaves.  Throws std::invalid_argument on a leaf
// mismatch.
SetCell cell_from_tree(const FreeAssocSet& s, int g, const Tree& t);

// The tree of a nondegenerate cell.  Throws std::invalid_argument on a
// degenerate cell.
Tree cell_tree(const FreeAssocSet& s, const SetCell& c);

// Whether the canonical word carries any degeneracy.
bool is_degenerate(const SetCell& c);

// Dimension of a cell: generator dimension minus faces plus degeneracies.
int cell_dim(const FreeAssocSet& s, const SetCell& c);

// Multi-index of a cell.  Throws std::domain_error when a stranded
// degeneracy lies outside the range of the face word's index.
Blocks cell_index(const FreeAssocSet& s, const SetCell& c);

// Multi-index of a cell, or nullopt when a degeneracy is stranded.
std::optional<Blocks> try_cell_index(const FreeAssocSet& s, const SetCell& c);

// A cell paired with its multi-index.
struct MultiIndexCell {
  Blocks index;
  int generator = 0;
};

// The multi-index view of a cell (requires an indexable cell).
MultiIndexCell multi_index_cell(const FreeAssocSet& s, const SetCell& c);

// Apply face d^q_{(i,l)} to a cell and normalize to canonical form.
// Throws std::out_of_range when (q,i,l) is not a face of the cell's index
// and std::domain_error when the cell has no index.
SetCell apply_face(const FreeAssocSet& s, const SetCell& c, int q, int i,
                   int l);

// Apply degeneracy s^q_j to a cell and normalize to canonical form.  Same
// error contract as apply_face.
SetCell apply_degeneracy(const FreeAssocSet& s, const SetCell& c, int q,
                         int j);

// --- chains of cells ---------------------------------------------------------

// An integer linear combination of cells, kept sorted by cell_less with no
// zero coefficients.
struct SetChain {
  std::vector<std::pair<SetCell, long long>> terms;

  void add(const SetCell& c, long long coefficient);
  void normalize();
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SetChain&) const = default;
};

// An integer linear combination of ordered pairs of cells.
struct SetTensorChain {
  std::vector<std::pair<std::pair<SetCell, SetCell>, long long>> terms;

  void add(const SetCell& left, const SetCell& right, long long coefficient);
  void normalize();
  bool is_zero() const { return terms.empty(); }
  bool operator==(const SetTensorChain&) const = default;
};

// The alternating-sum boundary of a cell: every face of its multi-index,
// signed level-wise.  Requires an indexable cell.
SetChain set_boundary(const FreeAssocSet& s, const SetCell& c);
SetChain set_boundary(const FreeAssocSet& s, const SetChain& ch);

// Drop every degenerate cell from a chain.
SetChain project_nondegenerate(const SetChain& ch);

// The diagonal of a nondegenerate cell, mapped through its tree.  Throws
// std::invalid_argument on a degenerate cell.
SetTensorChain set_diagonal(const FreeAssocSet& s, const SetCell& c);

// All nondegenerate cells of the set, sorted by dimension then cell_less.
std::vector<SetCell> nondegenerate_cells(const FreeAssocSet& s);

// The normalized chain complex of a free set: the nondegenerate basis, the
// boundary rows (pairs of basis index and coefficient), and the diagonal
// rows (pairs of basis indices and coefficient).
struct NormalizedChains {
  std::vector<SetCell> basis;
  std::vector<int> dims;
  std::vector<std::vector<std::pair<int, long long>>> d;
  std::vector<std::vector<std::tuple<int, int, long long>>> delta;
};

NormalizedChains normalized_chains(const FreeAssocSet& s);

}  // namespace assoc
