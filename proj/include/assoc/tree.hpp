#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace assoc {

// Planar rooted tree in which every internal node has at least two children.
// A tree with n+2 leaves and m+1 internal nodes stands for a codimension-m
// face of the associahedron K_{n+2}; the one-node tree (corolla) is the top
// cell and binary trees are the vertices.  Trees are plain values: identity
// is structural, and the structure itself is the canonical face key.
struct Tree {
  std::vector<Tree> ch;  // empty = leaf

  bool is_leaf() const { return ch.empty(); }
  int leaf_count() const;
  int node_count() const;  // internal nodes only
  int leaves_minus_2() const { return leaf_count() - 2; }
  int dim() const;  // n - m for a codim-m face of K_{n+2}

  bool operator==(const Tree& o) const { return ch == o.ch; }

  static Tree leaf() { return Tree{}; }
  static Tree corolla(int leaves);
};

// Total order used wherever trees key a map: compares the compact encodings.
bool tree_less(const Tree& a, const Tree& b);

// Path from the root: ch-indices to follow.  {} is the root itself.
using NodePath = std::vector<int>;

struct NodeInfo {
  NodePath path;
  int start = 0;  // offset of the leftmost leaf under the node
  int end = 0;    // offset of the rightmost leaf under the node
  int depth = 0;
  int arity = 0;  // number of children
};

// All internal nodes sorted by (start desc, depth desc).  With this order the
// root is always last, and the list position of a node is its 1-based tensor
// position q in the product-of-factors reading of the face: a node of arity
// n_q+2 is a K_{n_q+2} factor.
std::vector<NodeInfo> factor_order(const Tree& t);

const Tree& subtree_at(const Tree& t, const NodePath& p);

// (i,l)-surgery: bundle children i..i+l of the node at `p` under a new node.
// Requires 0 <= i, 1 <= l, i+l <= arity-1 (so the new node is proper).
Tree surgery(const Tree& t, const NodePath& p, int i, int l);
bool surgery_ok(const Tree& t, const NodePath& p, int i, int l);

// Contraction: splice the internal node at `p` (not the root) into its
// parent, replacing it by its children.  Inverse of a single surgery.
Tree contract(const Tree& t, const NodePath& p);

// Leaf intervals [start,end] of all internal nodes.  A face `a` lies in a
// face `b` exactly when every interval of `b` is an interval of `a`
// (refinement of parenthesizations).
std::vector<std::pair<int, int>> node_intervals(const Tree& t);
bool is_face_of(const Tree& a, const Tree& b);

// Exhaustive enumeration of faces of K_{leaves}: all planar trees on that
// many leaves, optionally restricted to an exact internal-node count.
std::vector<Tree> enumerate_trees(int leaves);
std::vector<Tree> enumerate_trees(int leaves, int nodes);

// Minimal / maximal vertex of a face: refine every node of arity >= 3 into
// the left (resp. right) comb on its children.
Tree min_vertex(const Tree& t);
Tree max_vertex(const Tree& t);
Tree left_comb(int leaves);
Tree right_comb(int leaves);

// Tamari order on the binary trees with a fixed leaf count, generated by
// right-shifts ((xy)z) -> (x(yz)).  covers() lists single right-shifts.
std::vector<Tree> tamari_covers(const Tree& t);
bool tamari_leq(const Tree& a, const Tree& b);

// Text form: '*' is a leaf, parentheses are internal nodes, e.g. "(*(**))".
// The root's parentheses are included.  Parsing accepts exactly this shape.
std::string to_string(const Tree& t);
Tree tree_from_string(std::string_view s);

// Compact 2-bit packing of the text form; fits in 64 bits through 9 leaves.
// Used as the map key in chain arithmetic.
std::uint64_t tree_code(const Tree& t);
Tree tree_from_code(std::uint64_t code);

}  // namespace assoc
