#include "assoc/tree.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace assoc {

int Tree::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const Tree& c : ch) n += c.leaf_count();
  return n;
}

int Tree::node_count() const {
  if (is_leaf()) return 0;
  int n = 1;
  for (const Tree& c : ch) n += c.node_count();
  return n;
}

int Tree::dim() const { return leaf_count() - 1 - node_count(); }

Tree Tree::corolla(int leaves) {
  if (leaves < 2) throw std::invalid_argument("corolla needs >= 2 leaves");
  Tree t;
  t.ch.assign(leaves, Tree{});
  return t;
}

bool tree_less(const Tree& a, const Tree& b) {
  return tree_code(a) < tree_code(b);
}

namespace {

void collect_nodes(const Tree& t, NodePath& path, int start, int depth,
                   std::vector<NodeInfo>& out) {
  if (t.is_leaf()) return;
  NodeInfo info;
  info.path = path;
  info.start = start;
  info.depth = depth;
  info.arity = static_cast<int>(t.ch.size());
  int pos = start;
  for (int c = 0; c < static_cast<int>(t.ch.size()); ++c) {
    path.push_back(c);
    collect_nodes(t.ch[c], path, pos, depth + 1, out);
    path.pop_back();
    pos += t.ch[c].leaf_count();
  }
  info.end = pos - 1;
  out.push_back(info);
}

}  // namespace

std::vector<NodeInfo> factor_order(const Tree& t) {
  if (t.is_leaf()) throw std::invalid_argument("bare leaf has no factors");
  std::vector<NodeInfo> nodes;
  NodePath path;
  collect_nodes(t, path, 0, 0, nodes);
  std::sort(nodes.begin(), nodes.end(), [](const NodeInfo& a, const NodeInfo& b) {
    if (a.start != b.start) return a.start > b.start;
    return a.depth > b.depth;
  });
  return nodes;
}

const Tree& subtree_at(const Tree& t, const NodePath& p) {
  const Tree* cur = &t;
  for (int c : p) {
    if (c < 0 || c >= static_cast<int>(cur->ch.size()))
      throw std::out_of_range("bad node path");
    cur = &cur->ch[c];
  }
  return *cur;
}

namespace {

Tree* mutable_subtree_at(Tree& t, const NodePath& p) {
  Tree* cur = &t;
  for (int c : p) {
    if (c < 0 || c >= static_cast<int>(cur->ch.size()))
      throw std::out_of_range("bad node path");
    cur = &cur->ch[c];
  }
  return cur;
}

}  // namespace

bool surgery_ok(const Tree& t, const NodePath& p, int i, int l) {
  const Tree& node = subtree_at(t, p);
  if (node.is_leaf()) return false;
  const int arity = static_cast<int>(node.ch.size());
  return i >= 0 && l >= 1 && l <= arity - 2 && i + l <= arity - 1;
}

Tree surgery(const Tree& t, const NodePath& p, int i, int l) {
  if (!surgery_ok(t, p, i, l)) throw std::invalid_argument("surgery out of range");
  Tree out = t;
  Tree* node = mutable_subtree_at(out, p);
  Tree bundle;
  bundle.ch.assign(node->ch.begin() + i, node->ch.begin() + i + l + 1);
  node->ch.erase(node->ch.begin() + i, node->ch.begin() + i + l + 1);
  node->ch.insert(node->ch.begin() + i, std::move(bundle));
  return out;
}

Tree contract(const Tree& t, const NodePath& p) {
  if (p.empty()) throw std::invalid_argument("cannot contract the root");
  if (subtree_at(t, p).is_leaf()) throw std::invalid_argument("cannot contract a leaf");
  Tree out = t;
  NodePath parent(p.begin(), p.end() - 1);
  const int slot = p.back();
  Tree* node = mutable_subtree_at(out, parent);
  Tree spliced = std::move(node->ch[slot]);
  node->ch.erase(node->ch.begin() + slot);
  node->ch.insert(node->ch.begin() + slot,
                  std::make_move_iterator(spliced.ch.begin()),
                  std::make_move_iterator(spliced.ch.end()));
  return out;
}

std::vector<std::pair<int, int>> node_intervals(const Tree& t) {
  std::vector<std::pair<int, int>> out;
  for (const NodeInfo& n : factor_order(t)) out.emplace_back(n.start, n.end);
  return out;
}

bool is_face_of(const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count()) return false;
  auto ia = node_intervals(a);
  auto ib = node_intervals(b);
  std::set<std::pair<int, int>> sa(ia.begin(), ia.end());
  for (const auto& iv : ib)
    if (!sa.count(iv)) return false;
  return true;
}

namespace {

// All trees on `leaves` leaves grouped by node count, memoized.  Scale is
// small (little Schroeder numbers; 103049 trees at 10 leaves).
const std::vector<std::vector<Tree>>& trees_by_nodes(int leaves) {
  static std::map<int, std::vector<std::vector<Tree>>> memo;
  auto it = memo.find(leaves);
  if (it != memo.end()) return it->second;

  std::vector<std::vector<Tree>> grouped;
  if (leaves == 1) {
    grouped.push_back({Tree::leaf()});  // a bare leaf, 0 nodes
  } else {
    // Split the leaves over k >= 2 ordered child blocks, recurse per block.
    std::vector<Tree> all;
    std::vector<std::vector<int>> splits;
    std::vector<int> acc;
    auto rec = [&](auto&& self, int remaining) -> void {
      if (remaining == 0) {
        if (static_cast<int>(acc.size()) >= 2) splits.push_back(acc);
        return;
      }
      for (int take = 1; take <= remaining; ++take) {
        acc.push_back(take);
        self(self, remaining - take);
        acc.pop_back();
      }
    };
    rec(rec, leaves);
    for (const auto& split : splits) {
      // product over blocks of all child subtrees
      std::vector<Tree> cur;
      cur.push_back(Tree{});  // root with no children yet
      for (int block : split) {
        std::vector<Tree> next;
        for (const auto& grp : trees_by_nodes(block)) {
          for (const Tree& sub : grp) {
            for (const Tree& partial : cur) {
              Tree ext = partial;
              ext.ch.push_back(sub);
              next.push_back(std::move(ext));
            }
          }
        }
        cur = std::move(next);
      }
      for (Tree& t : cur) all.push_back(std::move(t));
    }
    int maxnodes = leaves - 1;
    grouped.assign(maxnodes + 1, {});
    for (Tree& t : all) grouped[t.node_count()].push_back(std::move(t));
  }
  return memo.emplace(leaves, std::move(grouped)).first->second;
}

}  // namespace

std::vector<Tree> enumerate_trees(int leaves) {
  if (leaves < 2) throw std::invalid_argument("need >= 2 leaves");
  std::vector<Tree> out;
  for (const auto& grp : trees_by_nodes(leaves))
    for (const Tree& t : grp)
      if (!t.is_leaf()) out.push_back(t);
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return tree_less(a, b); });
  return out;
}

std::vector<Tree> enumerate_trees(int leaves, int nodes) {
  if (leaves < 2) throw std::invalid_argument("need >= 2 leaves");
  if (nodes < 1 || nodes > leaves - 1)
    throw std::invalid_argument("node count out of range");
  const auto& grouped = trees_by_nodes(leaves);
  std::vector<Tree> out = grouped[nodes];
  std::sort(out.begin(), out.end(),
            [](const Tree& a, const Tree& b) { return tree_less(a, b); });
  return out;
}

namespace {

Tree comb(std::vector<Tree> items, bool left) {
  // fold >= 2 items into nested binary nodes
  if (items.size() == 1) return items[0];
  if (left) {
    Tree acc = items[0];
    for (size_t k = 1; k < items.size(); ++k) {
      Tree node;
      node.ch.push_back(std::move(acc));
      node.ch.push_back(std::move(items[k]));
      acc = std::move(node);
    }
    return acc;
  }
  Tree acc = items.back();
  for (size_t k = items.size() - 1; k-- > 0;) {
    Tree node;
    node.ch.push_back(std::move(items[k]));
    node.ch.push_back(std::move(acc));
    acc = std::move(node);
  }
  return acc;
}

Tree refine_to_comb(const Tree& t, bool left) {
  if (t.is_leaf()) return t;
  std::vector<Tree> kids;
  kids.reserve(t.ch.size());
  for (const Tree& c : t.ch) kids.push_back(refine_to_comb(c, left));
  return comb(std::move(kids), left);
}

}  // namespace

Tree min_vertex(const Tree& t) { return refine_to_comb(t, /*left=*/true); }
Tree max_vertex(const Tree& t) { return refine_to_comb(t, /*left=*/false); }

Tree left_comb(int leaves) { return min_vertex(Tree::corolla(leaves)); }
Tree right_comb(int leaves) { return max_vertex(Tree::corolla(leaves)); }

namespace {

bool all_binary(const Tree& t) {
  if (t.is_leaf()) return true;
  if (t.ch.size() != 2) return false;
  return all_binary(t.ch[0]) && all_binary(t.ch[1]);
}

void collect_covers(const Tree& root, const Tree& t, NodePath& path,
                    std::vector<Tree>& out) {
  if (t.is_leaf()) return;
  // right-shift at this node: ((x y) z) -> (x (y z))
  if (!t.ch[0].is_leaf()) {
    Tree shifted_node;
    Tree right;
    right.ch.push_back(t.ch[0].ch[1]);
    right.ch.push_back(t.ch[1]);
    shifted_node.ch.push_back(t.ch[0].ch[0]);
    shifted_node.ch.push_back(std::move(right));
    Tree whole = root;
    Tree* spot = &whole;
    for (int c : path) spot = &spot->ch[c];
    *spot = std::move(shifted_node);
    out.push_back(std::move(whole));
  }
  for (int c = 0; c < 2; ++c) {
    path.push_back(c);
    collect_covers(root, t.ch[c], path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<Tree> tamari_covers(const Tree& t) {
  if (!all_binary(t)) throw std::invalid_argument("tamari needs binary trees");
  std::vector<Tree> out;
  NodePath path;
  collect_covers(t, t, path, out);
  return out;
}

bool tamari_leq(const Tree& a, const Tree& b) {
  if (a.leaf_count() != b.leaf_count())
    throw std::invalid_argument("leaf-count mismatch");
  // Reachability by right-shifts, memoized upward closure per start tree.
  static std::map<std::uint64_t, std::set<std::uint64_t>> memo;
  const std::uint64_t ka = tree_code(a), kb = tree_code(b);
  auto it = memo.find(ka);
  if (it == memo.end()) {
    std::set<std::uint64_t> seen{ka};
    std::queue<Tree> work;
    work.push(a);
    while (!work.empty()) {
      Tree cur = std::move(work.front());
      work.pop();
      for (Tree& nxt : tamari_covers(cur)) {
        if (seen.insert(tree_code(nxt)).second) work.push(std::move(nxt));
      }
    }
    it = memo.emplace(ka, std::move(seen)).first;
  }
  return it->second.count(kb) > 0;
}

std::string to_string(const Tree& t) {
  if (t.is_leaf()) return "*";
  std::string s = "(";
  for (const Tree& c : t.ch) s += to_string(c);
  s += ")";
  return s;
}

namespace {

Tree parse_tree(std::string_view s, size_t& pos) {
  if (pos >= s.size()) throw std::invalid_argument("truncated tree text");
  if (s[pos] == '*') {
    ++pos;
    return Tree::leaf();
  }
  if (s[pos] != '(') throw std::invalid_argument("expected '(' or '*'");
  ++pos;
  Tree t;
  while (pos < s.size() && s[pos] != ')') t.ch.push_back(parse_tree(s, pos));
  if (pos >= s.size()) throw std::invalid_argument("missing ')'");
  ++pos;
  if (t.ch.size() < 2) throw std::invalid_argument("node needs >= 2 children");
  return t;
}

}  // namespace

Tree tree_from_string(std::string_view s) {
  size_t pos = 0;
  Tree t = parse_tree(s, pos);
  if (pos != s.size()) throw std::invalid_argument("trailing tree text");
  if (t.is_leaf()) throw std::invalid_argument("bare leaf is not a face");
  return t;
}

std::uint64_t tree_code(const Tree& t) {
  // 2 bits per symbol of the text form: '(' = 1, '*' = 2, ')' = 3.
  // 9 leaves + 8 nodes -> 25 symbols -> 50 bits; beyond that we refuse.
  std::string s = to_string(t);
  if (s.size() > 32) throw std::length_error("tree too large for 64-bit code");
  std::uint64_t code = 0;
  for (char c : s) {
    code <<= 2;
    code |= (c == '(') ? 1u : (c == '*') ? 2u : 3u;
  }
  return code;
}

Tree tree_from_code(std::uint64_t code) {
  std::string s;
  while (code) {
    unsigned sym = code & 3u;
    s += (sym == 1) ? '(' : (sym == 2) ? '*' : ')';
    code >>= 2;
  }
  std::reverse(s.begin(), s.end());
  return tree_from_string(s);
}

}  // namespace assoc
