#include "assoc/graded_module.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>
#include <stdexcept>
#include <string>

namespace assoc {

namespace {

int sign_of(long long exponent) { return (exponent & 1) ? -1 : 1; }

void prune(Combo& c) {
  for (auto it = c.begin(); it != c.end();)
    it = (it->second == 0) ? c.erase(it) : std::next(it);
}

const char* kind_name(OpKind k) {
  return k == OpKind::algebra ? "algebra" : "coalgebra";
}

bool valid_token(const std::string& s) {
  if (s.empty() || s == "->" || s == ";") return false;
  for (char ch : s)
    if (ch == '#' || ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n')
      return false;
  return true;
}

long long word_degree(const GradedModuleInstance& m, const BasisWord& w) {
  long long d = 0;
  for (int b : w) d += m.degree[b];
  return d;
}

void check_indices(const GradedModuleInstance& m, const BasisWord& w) {
  for (int b : w)
    if (b < 0 || b >= static_cast<int>(m.basis.size()))
      throw std::invalid_argument("basis index out of range");
}

std::vector<BasisWord> all_words(int basis_size, int length) {
  std::vector<BasisWord> out{{}};
  for (int step = 0; step < length; ++step) {
    std::vector<BasisWord> next;
    next.reserve(out.size() * basis_size);
    for (const BasisWord& w : out)
      for (int b = 0; b < basis_size; ++b) {
        BasisWord v = w;
        v.push_back(b);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

// Koszul cost of interleaving a_1..a_n with b_1..b_n into pairs
// (a_1,b_1)..(a_n,b_n): each b_t crosses a_{t+1}..a_n.
long long interleave_cost(const GradedModuleInstance& A, const BasisWord& wa,
                          const GradedModuleInstance& B, const BasisWord& wb) {
  long long cost = 0;
  long long suffix = 0;
  for (int t = static_cast<int>(wa.size()) - 1; t >= 1; --t) {
    suffix += A.degree[wa[t]];
    cost += static_cast<long long>(B.degree[wb[t - 1]]) * suffix;
  }
  return cost;
}

}  // namespace

int GradedModuleInstance::index_of(std::string_view name) const {
  for (size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == name) return static_cast<int>(i);
  return -1;
}

const ModuleOp* GradedModuleInstance::op(int arity) const {
  for (const ModuleOp& o : ops)
    if (o.arity == arity) return &o;
  return nullptr;
}

void validate(const GradedModuleInstance& m) {
  if (!valid_token(m.name))
    throw std::invalid_argument("module name must be a single plain token");
  if (m.degree.size() != m.basis.size())
    throw std::invalid_argument("one degree per basis element required");
  for (size_t i = 0; i < m.basis.size(); ++i) {
    if (!valid_token(m.basis[i]))
      throw std::invalid_argument("basis name '" + m.basis[i] +
                                  "' is not a plain token");
    for (size_t j = i + 1; j < m.basis.size(); ++j)
      if (m.basis[i] == m.basis[j])
        throw std::invalid_argument("duplicate basis name '" + m.basis[i] +
                                    "'");
  }
  int prev_arity = 0;
  for (const ModuleOp& o : m.ops) {
    if (o.arity < 1) throw std::invalid_argument("operation arity must be >= 1");
    if (o.arity <= prev_arity)
      throw std::invalid_argument(
          "operations must be listed once each, in ascending arity");
    prev_arity = o.arity;
    size_t in_len = (m.kind == OpKind::coalgebra) ? 1 : o.arity;
    size_t out_len = (m.kind == OpKind::coalgebra) ? o.arity : 1;
    for (const ModuleEntry& e : o.entries) {
      if (e.in.size() != in_len || e.out.size() != out_len)
        throw std::invalid_argument("entry word lengths do not match arity " +
                                    std::to_string(o.arity));
      check_indices(m, e.in);
      check_indices(m, e.out);
      if (e.coeff == 0)
        throw std::invalid_argument("entries must have nonzero coefficients");
      long long din = word_degree(m, e.in);
      long long dout = word_degree(m, e.out);
      if (dout - din != o.arity - 2)
        throw std::invalid_argument(
            "degree law violated: an arity " + std::to_string(o.arity) +
            " operation must raise degree by " + std::to_string(o.arity - 2));
    }
  }
}

GradedModuleInstance parse_module(std::string_view text) {
  GradedModuleInstance m;
  bool have_module = false;
  bool have_kind = false;
  std::map<int, size_t> arity_slot;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& msg) -> void {
    throw std::invalid_argument("module text, line " + std::to_string(lineno) +
                                ": " + msg);
  };
  auto parse_int = [&](const std::string& s) -> long long {
    size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail("bad integer '" + s + "'");
    }
    if (pos != s.size()) fail("bad integer '" + s + "'");
    return v;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    std::istringstream ls(line);
    std::vector<std::string> tok{std::istream_iterator<std::string>(ls),
                                 std::istream_iterator<std::string>()};
    if (tok.empty()) continue;

    if (tok[0] == "module") {
      if (tok.size() != 2) fail("expected: module <name>");
      if (have_module) fail("duplicate module line");
      m.name = tok[1];
      have_module = true;
    } else if (tok[0] == "kind") {
      if (tok.size() != 2) fail("expected: kind algebra|coalgebra");
      if (have_kind) fail("duplicate kind line");
      if (tok[1] == "algebra")
        m.kind = OpKind::algebra;
      else if (tok[1] == "coalgebra")
        m.kind = OpKind::coalgebra;
      else
        fail("unknown kind '" + tok[1] + "'");
      have_kind = true;
    } else if (tok[0] == "basis") {
      if (tok.size() != 3) fail("expected: basis <name> <degree>");
      if (m.index_of(tok[1]) >= 0) fail("duplicate basis name '" + tok[1] + "'");
      long long deg = parse_int(tok[2]);
      m.basis.push_back(tok[1]);
      m.degree.push_back(static_cast<int>(deg));
    } else if (tok[0] == "op") {
      if (!have_kind) fail("op line before the kind is declared");
      auto arrow = std::find(tok.begin(), tok.end(), "->");
      auto semi = std::find(tok.begin(), tok.end(), ";");
      if (tok.size() < 6 || arrow == tok.end() || semi == tok.end() ||
          semi != tok.end() - 2 || arrow > semi)
        fail("expected: op <arity> <in..> -> <out..> ; <coeff>");
      long long arity = parse_int(tok[1]);
      if (arity < 1) fail("arity must be >= 1");
      auto names_to_word = [&](auto first, auto last) {
        BasisWord w;
        for (auto it = first; it != last; ++it) {
          int idx = m.index_of(*it);
          if (idx < 0) fail("unknown basis element '" + *it + "'");
          w.push_back(idx);
        }
        return w;
      };
      BasisWord in_word = names_to_word(tok.begin() + 2, arrow);
      BasisWord out_word = names_to_word(arrow + 1, semi);
      size_t want_in = (m.kind == OpKind::coalgebra) ? 1 : arity;
      size_t want_out = (m.kind == OpKind::coalgebra) ? arity : 1;
      if (in_word.size() != want_in || out_word.size() != want_out)
        fail("entry word lengths do not match arity " + std::to_string(arity));
      long long coeff = parse_int(tok.back());
      if (coeff == 0) fail("entry coefficient must be nonzero");
      auto slot = arity_slot.find(static_cast<int>(arity));
      if (slot == arity_slot.end()) {
        arity_slot[static_cast<int>(arity)] = m.ops.size();
        m.ops.push_back({static_cast<int>(arity), {}});
        slot = arity_slot.find(static_cast<int>(arity));
      }
      m.ops[slot->second].entries.push_back(
          {std::move(in_word), std::move(out_word), coeff});
    } else {
      fail("unknown keyword '" + tok[0] + "'");
    }
  }

  if (!have_module)
    throw std::invalid_argument("module text: missing module line");
  if (!have_kind) throw std::invalid_argument("module text: missing kind line");
  std::sort(m.ops.begin(), m.ops.end(),
            [](const ModuleOp& a, const ModuleOp& b) { return a.arity < b.arity; });
  validate(m);
  return m;
}

std::string serialize_module(const GradedModuleInstance& m) {
  validate(m);
  std::ostringstream os;
  os << "module " << m.name << "\n";
  os << "kind " << kind_name(m.kind) << "\n";
  for (size_t i = 0; i < m.basis.size(); ++i)
    os << "basis " << m.basis[i] << " " << m.degree[i] << "\n";
  for (const ModuleOp& o : m.ops)
    for (const ModuleEntry& e : o.entries) {
      os << "op " << o.arity;
      for (int b : e.in) os << " " << m.basis[b];
      os << " ->";
      for (int b : e.out) os << " " << m.basis[b];
      os << " ; " << e.coeff << "\n";
    }
  return os.str();
}

GradedModuleInstance builtin_dgc() {
  GradedModuleInstance m;
  m.name = "dgc3";
  m.kind = OpKind::coalgebra;
  m.basis = {"e1", "e2", "e3"};
  m.degree = {1, 2, 3};
  m.ops = {
      {1, {{{1}, {0}, 1}}},
      {2, {{{1}, {0, 0}, 1}, {{2}, {0, 1}, 1}, {{2}, {1, 0}, 1}}},
  };
  validate(m);
  return m;
}

GradedModuleInstance builtin_truncated_dga() {
  GradedModuleInstance m;
  m.name = "dga-trunc";
  m.kind = OpKind::algebra;
  m.basis = {"x", "y", "z1", "z2", "z3"};
  m.degree = {1, 2, 1, 2, 3};
  m.ops = {
      {1, {{{1}, {0}, 1}}},
      {2, {{{2, 2}, {3}, 1}, {{2, 3}, {4}, 1}, {{3, 2}, {4}, 1}}},
  };
  validate(m);
  return m;
}

GradedModuleInstance builtin_broken_dga() {
  GradedModuleInstance m;
  m.name = "dga-broken";
  m.kind = OpKind::algebra;
  m.basis = {"z1", "z2", "z3"};
  m.degree = {1, 2, 3};
  m.ops = {
      {2, {{{0, 0}, {1}, 1}, {{0, 1}, {2}, 1}}},
  };
  validate(m);
  return m;
}

GradedModuleInstance builtin_homotopy_coalgebra() {
  GradedModuleInstance m;
  m.name = "hco3";
  m.kind = OpKind::coalgebra;
  m.basis = {"e1", "e2", "e3"};
  m.degree = {1, 2, 3};
  m.ops = {
      {2, {{{1}, {0, 0}, 1}, {{2}, {0, 1}, 1}, {{2}, {1, 0}, 1}}},
      {3, {{{1}, {0, 0, 0}, 1}, {{2}, {0, 0, 1}, 1}, {{2}, {0, 1, 0}, 1}}},
  };
  validate(m);
  return m;
}

GradedModuleInstance builtin_homotopy_algebra() {
  GradedModuleInstance m;
  m.name = "hal3";
  m.kind = OpKind::algebra;
  m.basis = {"E1", "E2", "E3"};
  m.degree = {-1, -2, -3};
  m.ops = {
      {2, {{{0, 0}, {1}, 1}, {{0, 1}, {2}, 1}, {{1, 0}, {2}, 1}}},
      {3, {{{0, 0, 0}, {1}, 1}, {{0, 0, 1}, {2}, 1}, {{0, 1, 0}, {2}, 1}}},
  };
  validate(m);
  return m;
}

Combo evaluate(const Composite& c, const GradedModuleInstance& m,
               const BasisWord& input) {
  check_indices(m, input);
  Combo cur{{input, 1}};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    const PositionedOp& po = *it;
    if (po.symbol.kind != m.kind)
      throw std::invalid_argument("operator kind does not match the instance");
    if (po.left < 0 || po.right < 0)
      throw std::invalid_argument("operator offsets must be nonnegative");
    int k = po.symbol.arity;
    int width = (m.kind == OpKind::coalgebra) ? 1 : k;
    const ModuleOp* op = m.op(k);
    Combo next;
    for (const auto& [w, coeff] : cur) {
      if (static_cast<int>(w.size()) != po.left + width + po.right)
        throw std::invalid_argument("operator width mismatch");
      if (op == nullptr) continue;
      long long prefix = 0;
      for (int t = 0; t < po.left; ++t) prefix += m.degree[w[t]];
      int kos = sign_of(static_cast<long long>(k - 2) * prefix);
      for (const ModuleEntry& e : op->entries) {
        if (!std::equal(e.in.begin(), e.in.end(), w.begin() + po.left))
          continue;
        BasisWord y;
        y.reserve(w.size() - width + e.out.size());
        y.insert(y.end(), w.begin(), w.begin() + po.left);
        y.insert(y.end(), e.out.begin(), e.out.end());
        y.insert(y.end(), w.begin() + po.left + width, w.end());
        next[std::move(y)] += coeff * e.coeff * kos;
      }
    }
    cur = std::move(next);
  }
  prune(cur);
  return cur;
}

Combo evaluate(const OpExpr& e, const GradedModuleInstance& m,
               const BasisWord& input) {
  if (e.tensor)
    throw std::invalid_argument(
        "tensor expressions are realized through tensor_module");
  Combo total;
  for (const OpTerm& t : e.terms) {
    Combo r = evaluate(t.first, m, input);
    for (const auto& [w, c] : r) total[w] += static_cast<long long>(t.coeff) * c;
  }
  prune(total);
  return total;
}

std::map<BasisWord, Combo> relation_defect(const OpExpr& relation,
                                           const GradedModuleInstance& m) {
  if (relation.tensor || relation.kind != m.kind)
    throw std::invalid_argument("relation does not match the instance kind");
  std::map<BasisWord, Combo> defect;

  if (m.kind == OpKind::coalgebra) {
    for (int b = 0; b < static_cast<int>(m.basis.size()); ++b) {
      Combo c = evaluate(relation, m, {b});
      if (!c.empty()) defect[{b}] = std::move(c);
    }
    return defect;
  }

  // Algebra side: enumerate only inputs in the support of the stored
  // entries.  Every relation term is outer(full) o inner(positioned), so a
  // nonzero image needs an outer entry whose i-th input is an inner output.
  for (const OpTerm& t : relation.terms) {
    if (t.first.size() != 2 || !t.second.empty() || t.first[0].left != 0 ||
        t.first[0].right != 0)
      throw std::invalid_argument("relation terms must be quadratic");
    const PositionedOp& outer = t.first[0];
    const PositionedOp& inner = t.first[1];
    const ModuleOp* outer_op = m.op(outer.symbol.arity);
    const ModuleOp* inner_op = m.op(inner.symbol.arity);
    if (outer_op == nullptr || inner_op == nullptr) continue;
    int i = inner.left;
    int k = inner.symbol.arity;
    for (const ModuleEntry& eo : outer_op->entries) {
      for (const ModuleEntry& ei : inner_op->entries) {
        if (ei.out[0] != eo.in[i]) continue;
        BasisWord w;
        w.reserve(eo.in.size() - 1 + ei.in.size());
        w.insert(w.end(), eo.in.begin(), eo.in.begin() + i);
        w.insert(w.end(), ei.in.begin(), ei.in.end());
        w.insert(w.end(), eo.in.begin() + i + 1, eo.in.end());
        long long prefix = 0;
        for (int u = 0; u < i; ++u) prefix += m.degree[eo.in[u]];
        int kos = sign_of(static_cast<long long>(k - 2) * prefix);
        defect[w][eo.out] +=
            static_cast<long long>(t.coeff) * ei.coeff * eo.coeff * kos;
      }
    }
  }
  for (auto it = defect.begin(); it != defect.end();) {
    prune(it->second);
    it = it->second.empty() ? defect.erase(it) : std::next(it);
  }
  return defect;
}

GradedModuleInstance tensor_module(const GradedModuleInstance& a,
                                   const GradedModuleInstance& b,
                                   int max_arity) {
  validate(a);
  validate(b);
  if (a.kind != b.kind)
    throw std::invalid_argument("tensor factors must share a kind");
  if (max_arity < 1)
    throw std::invalid_argument("maximal arity must be >= 1");

  GradedModuleInstance T;
  T.kind = a.kind;
  T.name = a.name + "⊗" + b.name;
  int na = static_cast<int>(a.basis.size());
  int nb = static_cast<int>(b.basis.size());
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) {
      T.basis.push_back(a.basis[i] + "⊗" + b.basis[j]);
      T.degree.push_back(a.degree[i] + b.degree[j]);
    }
  auto pair_index = [nb](int i, int j) { return i * nb + j; };

  for (int n = 1; n <= max_arity; ++n) {
    std::map<std::pair<BasisWord, BasisWord>, long long> acc;
    if (T.kind == OpKind::coalgebra) {
      OpExpr expr = tensor_coalgebra_ops(n);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < nb; ++j)
          for (const OpTerm& t : expr.terms) {
            Combo ra = evaluate(t.first, a, {i});
            if (ra.empty()) continue;
            Combo rb = evaluate(t.second, b, {j});
            if (rb.empty()) continue;
            long long iota =
                static_cast<long long>(degree(t.second)) * a.degree[i];
            for (const auto& [wa, ca] : ra)
              for (const auto& [wb, cb] : rb) {
                long long ex = iota + interleave_cost(a, wa, b, wb);
                BasisWord out;
                out.reserve(n);
                for (int u = 0; u < n; ++u)
                  out.push_back(pair_index(wa[u], wb[u]));
                acc[{{pair_index(i, j)}, std::move(out)}] +=
                    static_cast<long long>(t.coeff) * ca * cb * sign_of(ex);
              }
          }
    } else {
      OpExpr expr = tensor_algebra_ops(n);
      std::vector<BasisWord> words_a = all_words(na, n);
      std::vector<BasisWord> words_b = all_words(nb, n);
      for (const OpTerm& t : expr.terms) {
        // Support of each side as (input word, output index, coefficient).
        std::vector<std::pair<BasisWord, std::pair<int, long long>>> sa, sb;
        for (const BasisWord& wa : words_a) {
          Combo r = evaluate(t.first, a, wa);
          for (const auto& [ya, ca] : r) sa.push_back({wa, {ya[0], ca}});
        }
        if (sa.empty()) continue;
        for (const BasisWord& wb : words_b) {
          Combo r = evaluate(t.second, b, wb);
          for (const auto& [yb, cb] : r) sb.push_back({wb, {yb[0], cb}});
        }
        if (sb.empty()) continue;
        long long dg = degree(t.second);
        for (const auto& [wa, oa] : sa)
          for (const auto& [wb, ob] : sb) {
            long long ex = dg * word_degree(a, wa);
            ex += interleave_cost(a, wa, b, wb);
            BasisWord in;
            in.reserve(n);
            for (int u = 0; u < n; ++u) in.push_back(pair_index(wa[u], wb[u]));
            acc[{std::move(in), {pair_index(oa.first, ob.first)}}] +=
                static_cast<long long>(t.coeff) * oa.second * ob.second *
                sign_of(ex);
          }
      }
    }
    ModuleOp op{n, {}};
    for (const auto& [key, coeff] : acc)
      if (coeff != 0) op.entries.push_back({key.first, key.second, coeff});
    if (!op.entries.empty()) T.ops.push_back(std::move(op));
  }
  validate(T);
  return T;
}

Combo apply_bar(const GradedModuleInstance& m, const BasisWord& word) {
  if (m.kind != OpKind::algebra)
    throw std::invalid_argument("bar differential needs an algebra instance");
  check_indices(m, word);
  int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("empty word");
  Combo res;
  long long lowering = 0;  // cost of lowering all n suspended inputs
  for (int j = 1; j <= n; ++j)
    lowering += static_cast<long long>(m.degree[word[j - 1]] + 1) * (n - j);
  for (const ModuleOp& op : m.ops) {
    int k = op.arity;
    if (k > n) continue;
    for (int i = 0; i + k <= n; ++i) {
      long long e = (n - k) / 2 + static_cast<long long>(i) * (k + 1);
      e += lowering;
      long long prefix = 0;
      for (int j = 0; j < i; ++j) prefix += m.degree[word[j]];
      e += static_cast<long long>(k - 2) * prefix;
      for (const ModuleEntry& en : op.entries) {
        if (!std::equal(en.in.begin(), en.in.end(), word.begin() + i))
          continue;
        BasisWord y;
        y.reserve(n - k + 1);
        y.insert(y.end(), word.begin(), word.begin() + i);
        y.insert(y.end(), en.out.begin(), en.out.end());
        y.insert(y.end(), word.begin() + i + k, word.end());
        int m2 = n - k + 1;
        long long raise = 0;
        for (int j = 1; j <= m2; ++j)
          raise += static_cast<long long>(m.degree[y[j - 1]]) * (m2 - j);
        res[std::move(y)] += en.coeff * sign_of(e + raise);
      }
    }
  }
  prune(res);
  return res;
}

Combo apply_cobar(const GradedModuleInstance& m, const BasisWord& word) {
  if (m.kind != OpKind::coalgebra)
    throw std::invalid_argument(
        "cobar differential needs a coalgebra instance");
  check_indices(m, word);
  int n = static_cast<int>(word.size());
  if (n < 1) throw std::invalid_argument("empty word");
  Combo res;
  long long raising = 0;  // cost of raising all n desuspended inputs
  for (int j = 1; j <= n; ++j)
    raising += static_cast<long long>(m.degree[word[j - 1]] - 1) * (n - j);
  for (const ModuleOp& op : m.ops) {
    int k = op.arity;
    for (int i = 0; i < n; ++i) {
      long long e = n / 2 + static_cast<long long>(i) * (k + 1) +
                    static_cast<long long>(k) * (n + 1);
      e += raising;
      long long prefix = 0;
      for (int j = 0; j < i; ++j) prefix += m.degree[word[j]];
      e += static_cast<long long>(k - 2) * prefix;
      for (const ModuleEntry& en : op.entries) {
        if (en.in[0] != word[i]) continue;
        BasisWord y;
        y.reserve(n + k - 1);
        y.insert(y.end(), word.begin(), word.begin() + i);
        y.insert(y.end(), en.out.begin(), en.out.end());
        y.insert(y.end(), word.begin() + i + 1, word.end());
        int m2 = n + k - 1;
        long long lower = 0;
        for (int j = 1; j <= m2; ++j)
          lower += static_cast<long long>(m.degree[y[j - 1]]) * (m2 - j);
        res[std::move(y)] += en.coeff * sign_of(e + lower);
      }
    }
  }
  prune(res);
  return res;
}

WordDifferential bar_differential(const GradedModuleInstance& m,
                                  int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("maximal word length must be >= 1");
  WordDifferential d;
  for (int len = 1; len <= max_length; ++len)
    for (BasisWord& w : all_words(static_cast<int>(m.basis.size()), len)) {
      Combo img = apply_bar(m, w);
      d.emplace(std::move(w), std::move(img));
    }
  return d;
}

WordDifferential cobar_differential(const GradedModuleInstance& m,
                                    int max_length) {
  if (max_length < 1)
    throw std::invalid_argument("maximal word length must be >= 1");
  WordDifferential d;
  for (int len = 1; len <= max_length; ++len)
    for (BasisWord& w : all_words(static_cast<int>(m.basis.size()), len)) {
      Combo img = apply_cobar(m, w);
      d.emplace(std::move(w), std::move(img));
    }
  return d;
}

SquareZeroResult check_square_zero(const WordDifferential& d, int max_length) {
  SquareZeroResult r;
  for (const auto& [w, img] : d) {
    bool certifiable = true;
    for (const auto& [v, c] : img)
      if (static_cast<int>(v.size()) > max_length) {
        certifiable = false;
        break;
      }
    if (!certifiable) continue;
    ++r.certified;
    Combo dd;
    for (const auto& [v, c] : img) {
      auto it = d.find(v);
      if (it == d.end())
        throw std::logic_error("differential table is missing a word");
      for (const auto& [u, c2] : it->second) dd[u] += c * c2;
    }
    prune(dd);
    if (!dd.empty() && r.ok) {
      r.ok = false;
      r.witness = w;
    }
  }
  if (r.certified == 0)
    throw std::invalid_argument("truncation too small to certify any word");
  return r;
}

}  // namespace assoc
