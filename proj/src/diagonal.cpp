#include "assoc/diagonal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace assoc {

int DiagonalSolution::i_at(int j) const {
  if (j == 0) return n + 1;
  if (j == p + 1) return 0;
  return i.at(j - 1);
}

int DiagonalSolution::ip_at(int k) const {
  if (k == 0) return n + 1;
  if (k == q + 1) return 0;
  return ip.at(k - 1);
}

int DiagonalSolution::eps_at(int u) const {
  if (u == 0) return 0;
  if (u == q + 1) return n + 1;
  return eps.at(u - 1);
}

int DiagonalSolution::l_sum(int u) const {
  if (u == p + 1) return n + 1;
  int acc = 0;
  for (int j = 1; j <= u; ++j) acc += l.at(j - 1);
  return acc;
}

int DiagonalSolution::lp_sum(int u) const {
  if (u == q + 1) return n + 1;
  int acc = 0;
  for (int k = 1; k <= u; ++k) acc += lp.at(k - 1);
  return acc;
}

int DiagonalSolution::o(int u) const {
  int best = 0;
  for (int r = 0; r <= p + 1; ++r)
    if (i_at(r) >= eps_at(u)) best = r;
  return best;
}

int DiagonalSolution::o_prime(int u) const {
  int best = 0;
  for (int r = 0; r <= q + 1; ++r)
    if (eps_at(r) <= i_at(u)) best = r;
  return best;
}

int DiagonalSolution::t(int u) const {
  const int lo = l_sum(o(u));
  for (int r = 1; r <= p + 1; ++r)
    if (i_at(r) + l_sum(r) - lo > eps_at(u) && eps_at(u) > i_at(r)) return r;
  return 0;
}

Word DiagonalSolution::right_word() const {
  Word w;
  w.ambient = n + 2;
  for (int j = 1; j <= p; ++j) w.ops.push_back({j, i[j - 1], l[j - 1]});
  return w;
}

Word DiagonalSolution::left_word() const {
  Word w;
  w.ambient = n + 2;
  for (int k = 1; k <= q; ++k) w.ops.push_back({k, ip[k - 1], lp[k - 1]});
  return w;
}

namespace {

// Depth-first over i'_k (l'_k is then forced by (4)).  Everything on the
// right-hand side — i, l, eps — is already fixed when this runs.
void extend_left(DiagonalSolution& s, int k,
                 std::vector<DiagonalSolution>& out) {
  if (k > s.q) {
    out.push_back(s);
    return;
  }
  const int lp_prev = s.lp_sum(k - 1);
  int bound = s.eps_at(k) - lp_prev - 1;  // keeps l'_k >= 1
  if (const int tk = s.t(k); tk != 0) {
    const int opk = s.o_prime(tk);
    bound = std::min(bound, s.i_at(tk) - s.lp_sum(opk));
    for (int r = opk + 1; r < k; ++r) bound = std::min(bound, s.ip_at(r));
  }
  for (int v = 0; v <= bound; ++v) {
    s.ip.push_back(v);
    s.lp.push_back(s.eps_at(k) - v - lp_prev);
    extend_left(s, k + 1, out);
    s.ip.pop_back();
    s.lp.pop_back();
  }
}

// Depth-first over (i_j, l_j) under (1) and (2); at j = p+1 the complement
// eps is fixed and the left-hand side is enumerated.
void extend_right(DiagonalSolution& s, int j,
                  std::vector<DiagonalSolution>& out) {
  if (j > s.p) {
    s.eps.clear();
    for (int v = 1; v <= s.n; ++v)
      if (std::find(s.i.begin(), s.i.end(), v) == s.i.end())
        s.eps.push_back(v);
    extend_left(s, 1, out);
    return;
  }
  for (int vi = 1; vi < s.i_at(j - 1); ++vi) {
    if (vi - 1 < s.p - j) continue;  // no room left for a decreasing tail
    const int lmax = s.n + 1 - vi - s.l_sum(j - 1);
    for (int vl = 1; vl <= lmax; ++vl) {
      s.i.push_back(vi);
      s.l.push_back(vl);
      extend_right(s, j + 1, out);
      s.i.pop_back();
      s.l.pop_back();
    }
  }
}

}  // namespace

std::vector<DiagonalSolution> enumerate_solutions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_solutions: n < 0");
  std::vector<DiagonalSolution> out;
  for (int p = 0; p <= n; ++p) {
    DiagonalSolution s;
    s.n = n;
    s.p = p;
    s.q = n - p;
    extend_right(s, 1, out);
  }
  return out;
}

namespace {

// Parity of the Koszul cost of sorting the left word's factors from
// creation order into canonical factor order (see sign_epsilon's contract).
// Bundle intervals are found by replaying the word on the root's child
// list in absolute leaf coordinates.
int left_reorder_parity(const DiagonalSolution& s) {
  std::vector<std::pair<int, int>> child;  // current root children
  child.reserve(s.n + 2);
  for (int leaf = 1; leaf <= s.n + 2; ++leaf) child.push_back({leaf, leaf});
  std::vector<std::pair<int, int>> bundle(s.q);
  for (int k = 1; k <= s.q; ++k) {
    const int first = s.ip[k - 1];
    const int count = s.lp[k - 1] + 1;
    bundle[k - 1] = {child[first].first, child[first + count - 1].second};
    child.erase(child.begin() + first + 1, child.begin() + first + count);
    child[first] = bundle[k - 1];
  }
  int e = 0;
  for (int k = 2; k <= s.q; ++k)
    for (int r = 1; r < k; ++r)
      if (bundle[k - 1].first > bundle[r - 1].second)
        e += (s.lp[r - 1] - 1) * (s.lp[k - 1] - 1);
  return e & 1;
}

}  // namespace

int sign_epsilon(const DiagonalSolution& s) {
  long long e = left_reorder_parity(s);
  for (int k = 1; k <= s.q; ++k)
    e += static_cast<long long>(s.ip[k - 1]) * (s.lp[k - 1] + 1);
  for (int j = 1; j <= s.p; ++j)
    e += static_cast<long long>(s.i[j - 1] + j + s.p + 1) * s.l[j - 1];
  return e % 2 == 0 ? 1 : -1;
}

std::vector<DiagonalTerm> diagonal_terms(int n) {
  std::vector<DiagonalTerm> out;
  for (const DiagonalSolution& s : enumerate_solutions(n))
    out.push_back({s.left_word(), s.right_word(), sign_epsilon(s)});
  return out;
}

const TensorChain& diagonal_top(int n) {
  static std::map<int, TensorChain> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  TensorChain tc;
  for (const DiagonalTerm& term : diagonal_terms(n))
    tc.add(evaluate(term.left), evaluate(term.right), term.sign);
  tc.normalize();
  return cache.emplace(n, std::move(tc)).first->second;
}

std::vector<NodeInfo> product_decomposition(const Tree& t) {
  return factor_order(t);
}

namespace {

// Replace the leaves of a factor's local tree, left to right, by the
// already-rebuilt subtrees hanging under the corresponding node.
Tree graft(const Tree& local, const std::vector<Tree>& kids, int& next) {
  if (local.is_leaf()) return kids[next++];
  Tree out;
  out.ch.reserve(local.ch.size());
  for (const Tree& c : local.ch) out.ch.push_back(graft(c, kids, next));
  return out;
}

// Rebuild the face bottom-up, substituting each internal node's prescribed
// local tree (a face of K_{arity}) for its corolla.
Tree assemble(const Tree& t, const std::map<NodePath, const Tree*>& pick,
              NodePath& path) {
  if (t.is_leaf()) return t;
  std::vector<Tree> kids;
  kids.reserve(t.ch.size());
  for (int c = 0; c < static_cast<int>(t.ch.size()); ++c) {
    path.push_back(c);
    kids.push_back(assemble(t.ch[c], pick, path));
    path.pop_back();
  }
  int next = 0;
  return graft(*pick.at(path), kids, next);
}

// One factor cell of an assembled face, identified by its ambient leaf
// interval.  Factor order on a single tree is (start desc, depth desc),
// which on intervals is (start desc, end asc): equal starts mean nesting,
// and the deeper node covers the shorter interval.
struct FactorSlot {
  int start = 0;
  int end = 0;
  int dim = 0;
};

bool slot_precedes(const FactorSlot& a, const FactorSlot& b) {
  if (a.start != b.start) return a.start > b.start;
  return a.end < b.end;
}

// The factors an assembled face inherits, listed block by block: for each
// factor r of the ambient face, the factors of its local tree in local
// order, with intervals translated through the spans of node r's children.
std::vector<FactorSlot> concatenated_slots(
    const std::vector<const Tree*>& locals,
    const std::vector<std::vector<std::pair<int, int>>>& child_span) {
  std::vector<FactorSlot> slots;
  for (std::size_t r = 0; r < locals.size(); ++r)
    for (const NodeInfo& node : factor_order(*locals[r]))
      slots.push_back({child_span[r][node.start].first,
                       child_span[r][node.end].second, node.arity - 2});
  return slots;
}

// Koszul cost of re-sorting the concatenated blocks into the assembled
// face's own factor order: grafting preserves the order inside each block,
// so only cross-block inversions contribute.
int sort_sign_exponent(const std::vector<FactorSlot>& slots) {
  int e = 0;
  for (std::size_t a = 0; a < slots.size(); ++a)
    for (std::size_t b = a + 1; b < slots.size(); ++b)
      if (slot_precedes(slots[b], slots[a])) e += slots[a].dim * slots[b].dim;
  return e;
}

}  // namespace

TensorChain diagonal(const Tree& t) {
  const std::vector<NodeInfo> factors = product_decomposition(t);
  const int m = static_cast<int>(factors.size());
  std::vector<const TensorChain*> parts(m);
  std::vector<std::vector<std::pair<int, int>>> child_span(m);
  for (int r = 0; r < m; ++r) {
    parts[r] = &diagonal_top(factors[r].arity - 2);
    const Tree& node = subtree_at(t, factors[r].path);
    int at = factors[r].start;
    for (const Tree& c : node.ch) {
      child_span[r].push_back({at, at + c.leaf_count() - 1});
      at += c.leaf_count();
    }
  }

  TensorChain out;
  std::vector<std::size_t> idx(m, 0);
  std::vector<const Tree*> left_local(m), right_local(m);
  for (;;) {
    long long coeff = 1;
    std::map<NodePath, const Tree*> pick_left, pick_right;
    std::vector<int> ldim(m), rdim(m);
    for (int r = 0; r < m; ++r) {
      const auto& [pair, c] = parts[r]->terms[idx[r]];
      coeff *= c;
      pick_left[factors[r].path] = left_local[r] = &pair.first;
      pick_right[factors[r].path] = right_local[r] = &pair.second;
      ldim[r] = pair.first.dim();
      rdim[r] = pair.second.dim();
    }
    // Interleaving sign of the shuffle (L1 R1)...(Lm Rm) -> (L1..Lm)(R1..Rm),
    // then the re-sort of each assembled side into its own factor order.
    int koszul = 0;
    for (int r = 0; r < m; ++r)
      for (int s = r + 1; s < m; ++s) koszul += rdim[r] * ldim[s];
    koszul += sort_sign_exponent(concatenated_slots(left_local, child_span));
    koszul += sort_sign_exponent(concatenated_slots(right_local, child_span));
    if (koszul % 2 != 0) coeff = -coeff;
    NodePath root;
    const Tree left = assemble(t, pick_left, root);
    const Tree right = assemble(t, pick_right, root);
    out.add(left, right, coeff);

    int r = m - 1;
    while (r >= 0 && idx[r] + 1 == parts[r]->terms.size()) idx[r--] = 0;
    if (r < 0) break;
    ++idx[r];
  }
  out.normalize();
  return out;
}

TensorChain diagonal(const Chain& c) {
  TensorChain out;
  for (const auto& [t, coef] : c.terms)
    for (const auto& [pair, c2] : diagonal(t).terms)
      out.add(pair.first, pair.second, coef * c2);
  out.normalize();
  return out;
}

}  // namespace assoc
