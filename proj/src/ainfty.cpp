#include "assoc/ainfty.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "assoc/diagonal.hpp"

namespace assoc {

namespace {

int sign_of(long long exponent) { return (exponent & 1) ? -1 : 1; }

void check_face_word(const Word& w) {
  if (w.ambient < 2)
    throw std::invalid_argument("face word needs ambient arity >= 2");
  if (!has_consecutive_superscripts(w))
    throw std::invalid_argument(
        "face word must have consecutive superscripts (q_r = r)");
  if (!is_admissible(w))
    throw std::invalid_argument("inadmissible face word");
}

OpTerm leibniz_term(OpKind kind, TensorSide side) {
  Composite c{{OpSymbol{side, kind, 1}, 0, 0}};
  if (side == TensorSide::first) return OpTerm{1, std::move(c), {}};
  return OpTerm{1, {}, std::move(c)};
}

}  // namespace

OpExpr algebra_relation(int n) {
  if (n < 1) throw std::invalid_argument("relation arity must be >= 1");
  OpExpr e{OpKind::algebra, false, false, n, n, 1, {}};
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i + l < n; ++i) {
      int coeff = sign_of(static_cast<long long>(l) * (i + 1));
      Composite c{
          {OpSymbol{TensorSide::first, OpKind::algebra, n - l}, 0, 0},
          {OpSymbol{TensorSide::first, OpKind::algebra, l + 1}, i,
           n - l - 1 - i},
      };
      e.terms.push_back({coeff, std::move(c), {}});
    }
  }
  return e;
}

OpExpr coalgebra_relation(int n) {
  if (n < 1) throw std::invalid_argument("relation arity must be >= 1");
  OpExpr e{OpKind::coalgebra, false, false, n, 1, n, {}};
  for (int l = 0; l < n; ++l) {
    for (int i = 0; i + l < n; ++i) {
      int coeff = sign_of(static_cast<long long>(l) * (n + i + 1));
      Composite c{
          {OpSymbol{TensorSide::first, OpKind::coalgebra, l + 1}, i,
           n - l - 1 - i},
          {OpSymbol{TensorSide::first, OpKind::coalgebra, n - l}, 0, 0},
      };
      e.terms.push_back({coeff, std::move(c), {}});
    }
  }
  return e;
}

Composite coalgebra_decoration(const Word& w, TensorSide side) {
  check_face_word(w);
  Composite c;
  c.reserve(w.ops.size() + 1);
  int lsum = 0;
  for (const FaceOp& op : w.ops) {
    lsum += op.l;
    int j = w.ambient - lsum - op.i - 1;
    if (op.i < 0 || j < 0)
      throw std::logic_error("face word offsets out of range");
    c.push_back({OpSymbol{side, OpKind::coalgebra, op.l + 1}, op.i, j});
  }
  c.push_back({OpSymbol{side, OpKind::coalgebra, w.ambient - lsum}, 0, 0});
  return c;
}

std::pair<int, Composite> algebra_decoration(const Word& w, TensorSide side) {
  Composite xi = coalgebra_decoration(w, side);
  Composite zeta(xi.rbegin(), xi.rend());
  for (PositionedOp& po : zeta) po.symbol.kind = OpKind::algebra;
  long long m = static_cast<long long>(w.ops.size());
  return {sign_of(w.ambient * (m + 1)), std::move(zeta)};
}

OpExpr tensor_coalgebra_ops(int n) {
  if (n < 1) throw std::invalid_argument("operation arity must be >= 1");
  OpExpr e{OpKind::coalgebra, true, n >= 2, n, 1, n, {}};
  if (n == 1) {
    e.terms.push_back(leibniz_term(OpKind::coalgebra, TensorSide::first));
    e.terms.push_back(leibniz_term(OpKind::coalgebra, TensorSide::second));
    return e;
  }
  for (const DiagonalTerm& t : diagonal_terms(n - 2)) {
    e.terms.push_back({t.sign,
                       coalgebra_decoration(t.left, TensorSide::first),
                       coalgebra_decoration(t.right, TensorSide::second)});
  }
  return e;
}

OpExpr tensor_algebra_ops(int n) {
  if (n < 1) throw std::invalid_argument("operation arity must be >= 1");
  OpExpr e{OpKind::algebra, true, n >= 2, n, n, 1, {}};
  if (n == 1) {
    e.terms.push_back(leibniz_term(OpKind::algebra, TensorSide::first));
    e.terms.push_back(leibniz_term(OpKind::algebra, TensorSide::second));
    return e;
  }
  for (const DiagonalTerm& t : diagonal_terms(n - 2)) {
    auto [sl, left] = algebra_decoration(t.left, TensorSide::first);
    auto [sr, right] = algebra_decoration(t.right, TensorSide::second);
    e.terms.push_back({t.sign * sl * sr, std::move(left), std::move(right)});
  }
  return e;
}

int degree(const Composite& c) {
  int d = 0;
  for (const PositionedOp& po : c) d += po.symbol.degree();
  return d;
}

int term_degree(const OpTerm& t) { return degree(t.first) + degree(t.second); }

bool is_homogeneous(const OpExpr& e) {
  if (e.terms.empty()) return true;
  int d = term_degree(e.terms.front());
  for (const OpTerm& t : e.terms)
    if (term_degree(t) != d) return false;
  return true;
}

std::string to_string(const PositionedOp& op, bool with_offset) {
  std::string s = (op.symbol.kind == OpKind::coalgebra) ? "ψ" : "φ";
  s += "^" + std::to_string(op.symbol.arity);
  if (with_offset) s += "_" + std::to_string(op.left);
  return s;
}

std::string to_string(const Composite& c) {
  if (c.empty()) return "1";
  bool with_offset = c.size() >= 2;
  std::string s;
  for (size_t r = 0; r < c.size(); ++r) {
    if (r) s += " ";
    s += to_string(c[r], with_offset);
  }
  return s;
}

std::string to_string(const OpTerm& t, bool tensor) {
  if (!tensor) return to_string(t.first);
  return to_string(t.first) + " ⊗ " + to_string(t.second);
}

std::string to_string(const OpExpr& e) {
  if (e.terms.empty()) return "0";
  std::string body;
  for (size_t k = 0; k < e.terms.size(); ++k) {
    const OpTerm& t = e.terms[k];
    if (k == 0) {
      if (t.coeff < 0) body += "- ";
    } else {
      body += (t.coeff < 0) ? " - " : " + ";
    }
    long long mag = std::llabs(static_cast<long long>(t.coeff));
    if (mag != 1) body += std::to_string(mag) + " ";
    body += to_string(t, e.tensor);
  }
  if (e.sigma) {
    if (e.kind == OpKind::coalgebra)
      return "σ_{" + std::to_string(e.n) + ",2}(" + body + ")";
    return "σ_{2," + std::to_string(e.n) + "}(" + body + ")";
  }
  return body;
}

}  // namespace assoc
