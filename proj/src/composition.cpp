#include "assoc/composition.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace assoc {

namespace {

// Path of the internal node whose leaf interval is [s,e]; child intervals are
// strict subsets of their parent's, so the interval pins down one node.
std::optional<NodePath> node_with_interval(const Tree& t, int s, int e) {
  NodePath path;
  const Tree* cur = &t;
  int cs = 0;
  while (true) {
    if (cur->is_leaf()) return std::nullopt;
    if (cs == s && cs + cur->leaf_count() - 1 == e) return path;
    int off = cs;
    bool moved = false;
    for (int k = 0; k < static_cast<int>(cur->ch.size()); ++k) {
      const int lc = cur->ch[k].leaf_count();
      if (off <= s && e <= off + lc - 1) {
        path.push_back(k);
        cur = &cur->ch[k];
        cs = off;
        moved = true;
        break;
      }
      off += lc;
    }
    if (!moved) return std::nullopt;
  }
}

}  // namespace

std::optional<Tree> try_evaluate(const Word& w) {
  if (w.ambient < 2) return std::nullopt;
  Tree t = Tree::corolla(w.ambient);
  // d^q splits factor q in place: the new block becomes factor q and the
  // shrunken block follows at q+1, so the list records creation slots (leaf
  // intervals), not the sorted decomposition.
  std::vector<std::pair<int, int>> factors{{0, w.ambient - 1}};
  for (const FaceOp& op : w.ops) {
    if (op.q < 1 || op.q > static_cast<int>(factors.size())) return std::nullopt;
    const auto [s, e] = factors[op.q - 1];
    auto path = node_with_interval(t, s, e);
    if (!path || !surgery_ok(t, *path, op.i, op.l)) return std::nullopt;
    const Tree& node = subtree_at(t, *path);
    int off = s;
    std::vector<std::pair<int, int>> kid;
    for (const Tree& c : node.ch) {
      kid.emplace_back(off, off + c.leaf_count() - 1);
      off += c.leaf_count();
    }
    factors.insert(factors.begin() + (op.q - 1),
                   {kid[op.i].first, kid[op.i + op.l].second});
    t = surgery(t, *path, op.i, op.l);
  }
  return t;
}

Tree evaluate(const Word& w) {
  auto t = try_evaluate(w);
  if (!t) throw std::invalid_argument("inadmissible composition: " + to_string(w));
  return *t;
}

bool is_admissible(const Word& w) { return try_evaluate(w).has_value(); }

Word canonical_word(const Tree& t, Form form) {
  Word w;
  w.ambient = t.leaf_count();
  std::vector<NodeInfo> nodes = factor_order(t);
  nodes.pop_back();  // root is created by nothing
  if (form == Form::second) {
    // left-to-right postorder: (end asc, depth desc); nodes with equal end
    // lie on a common last-child chain, deeper one first.
    std::sort(nodes.begin(), nodes.end(), [](const NodeInfo& a, const NodeInfo& b) {
      if (a.end != b.end) return a.end < b.end;
      return a.depth > b.depth;
    });
  }
  // else: factor_order is already (start desc, depth desc) = right-to-left
  // postorder, the first-form creation order.

  // Replay the surgeries as seen from the root: the working word holds the
  // leaf intervals of the completed top-level blocks.
  std::vector<std::pair<int, int>> toks;
  for (int k = 0; k < w.ambient; ++k) toks.emplace_back(k, k);
  int r = 0;
  for (const NodeInfo& node : nodes) {
    ++r;
    int idx = -1;
    for (int k = 0; k < static_cast<int>(toks.size()); ++k)
      if (toks[k].first == node.start) { idx = k; break; }
    if (idx < 0 || idx + node.arity > static_cast<int>(toks.size()) ||
        toks[idx + node.arity - 1].second != node.end)
      throw std::logic_error("creation order is not child-before-parent");
    toks.erase(toks.begin() + idx + 1, toks.begin() + idx + node.arity);
    toks[idx] = {node.start, node.end};
    w.ops.push_back(FaceOp{r, idx, node.arity - 1});
  }
  return w;
}

Word first_form(const Tree& t) { return canonical_word(t, Form::first); }
Word second_form(const Tree& t) { return canonical_word(t, Form::second); }

bool has_consecutive_superscripts(const Word& w) {
  for (int r = 0; r < static_cast<int>(w.ops.size()); ++r)
    if (w.ops[r].q != r + 1) return false;
  return true;
}

bool is_type1(const Word& w) {
  if (!has_consecutive_superscripts(w)) return false;
  for (size_t r = 0; r + 1 < w.ops.size(); ++r)
    if (w.ops[r].i < w.ops[r + 1].i) return false;
  return true;
}

bool is_type2(const Word& w) {
  if (!has_consecutive_superscripts(w)) return false;
  for (size_t r = 0; r + 1 < w.ops.size(); ++r)
    if (w.ops[r].i > w.ops[r + 1].i + w.ops[r + 1].l) return false;
  return true;
}

int l_partial(const Word& w, int u) {
  if (u < 0 || u > static_cast<int>(w.ops.size()))
    throw std::out_of_range("partial-sum index");
  int s = 0;
  for (int r = 0; r < u; ++r) s += w.ops[r].l;
  return s;
}

Word normalize_first(const Word& w) { return first_form(evaluate(w)); }
Word normalize_second(const Word& w) { return second_form(evaluate(w)); }

namespace {

std::string render(const Word& w, bool latex) {
  if (w.ops.empty()) return "1";
  const bool with_q = !has_consecutive_superscripts(w);
  std::string s;
  for (size_t r = w.ops.size(); r-- > 0;) {
    const FaceOp& op = w.ops[r];
    s += "d";
    if (with_q) {
      if (latex)
        s += "^{" + std::to_string(op.q) + "}";
      else
        s += "^" + std::to_string(op.q);
    }
    if (latex)
      s += "_{(" + std::to_string(op.i) + "," + std::to_string(op.l) + ")}";
    else
      s += "_(" + std::to_string(op.i) + "," + std::to_string(op.l) + ")";
  }
  return s;
}

}  // namespace

std::string to_string(const Word& w) { return render(w, /*latex=*/false); }
std::string to_latex(const Word& w) { return render(w, /*latex=*/true); }

namespace {

struct Cursor {
  std::string_view s;
  size_t pos = 0;
  bool done() const { return pos >= s.size(); }
  char peek() const { return s[pos]; }
  bool eat(char c) {
    if (!done() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("bad operator text near position " +
                                  std::to_string(pos));
  }
  int number() {
    size_t start = pos;
    while (!done() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected a number");
    return std::stoi(std::string(s.substr(start, pos - start)));
  }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
};

}  // namespace

Word word_from_string(std::string_view text, int ambient) {
  Word w;
  w.ambient = ambient;
  Cursor c{text};
  c.skip_ws();
  if (!c.done() && c.peek() == '1') {
    c.eat('1');
    c.skip_ws();
    if (!c.done()) throw std::invalid_argument("trailing text after \"1\"");
    return w;
  }
  // display order: leftmost printed = applied last
  std::vector<FaceOp> display;
  std::vector<bool> had_q;
  while (!c.done()) {
    c.expect('d');
    FaceOp op;
    bool explicit_q = false;
    if (c.eat('^')) {
      bool braced = c.eat('{');
      op.q = c.number();
      if (braced) c.expect('}');
      explicit_q = true;
    }
    c.expect('_');
    bool braced = c.eat('{');
    c.expect('(');
    op.i = c.number();
    c.expect(',');
    op.l = c.number();
    c.expect(')');
    if (braced) c.expect('}');
    display.push_back(op);
    had_q.push_back(explicit_q);
    c.skip_ws();
  }
  const size_t m = display.size();
  bool any_q = std::find(had_q.begin(), had_q.end(), true) != had_q.end();
  bool all_q = std::find(had_q.begin(), had_q.end(), false) == had_q.end();
  if (any_q && !all_q)
    throw std::invalid_argument("either give every superscript or none");
  w.ops.assign(display.rbegin(), display.rend());
  if (!any_q)
    for (size_t r = 0; r < m; ++r) w.ops[r].q = static_cast<int>(r) + 1;
  return w;
}

}  // namespace assoc
