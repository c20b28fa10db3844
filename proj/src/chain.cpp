#include "assoc/chain.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoc {

void Chain::add(const Tree& t, long long c) { terms.emplace_back(t, c); }

void Chain::normalize() {
  std::vector<std::pair<std::uint64_t, size_t>> order(terms.size());
  for (size_t k = 0; k < terms.size(); ++k)
    order[k] = {tree_code(terms[k].first), k};
  std::sort(order.begin(), order.end());
  std::vector<std::pair<Tree, long long>> merged;
  merged.reserve(terms.size());
  for (size_t k = 0; k < order.size();) {
    size_t s = k;
    long long c = 0;
    while (s < order.size() && order[s].first == order[k].first)
      c += terms[order[s++].second].second;
    if (c != 0) merged.emplace_back(terms[order[k].second].first, c);
    k = s;
  }
  terms = std::move(merged);
}

void TensorChain::add(const Tree& l, const Tree& r, long long c) {
  terms.push_back({{l, r}, c});
}

void TensorChain::normalize() {
  std::vector<std::pair<std::pair<std::uint64_t, std::uint64_t>, size_t>> order(
      terms.size());
  for (size_t k = 0; k < terms.size(); ++k)
    order[k] = {{tree_code(terms[k].first.first), tree_code(terms[k].first.second)},
                k};
  std::sort(order.begin(), order.end());
  std::vector<std::pair<std::pair<Tree, Tree>, long long>> merged;
  merged.reserve(terms.size());
  for (size_t k = 0; k < order.size();) {
    size_t s = k;
    long long c = 0;
    while (s < order.size() && order[s].first == order[k].first)
      c += terms[order[s++].second].second;
    if (c != 0) merged.push_back({terms[order[k].second].first, c});
    k = s;
  }
  terms = std::move(merged);
}

Blocks blocks_of(const Tree& t) {
  Blocks b;
  for (const NodeInfo& n : factor_order(t)) {
    const int j = n.path.empty() ? 0 : n.start;
    b.jn.emplace_back(j, n.arity - 2);
  }
  return b;
}

namespace {

// j(q,r): the leaf offset the new parenthesis pair would carry if its block
// were filed at position r of the block list.
int j_of(const Blocks& b, int q, int i, int r) {
  const int jq = b.jn[q - 1].first;
  if (r == q) return i + jq;
  int nsum = 0;
  for (int s = r; s <= q - 1; ++s) nsum += b.jn[s - 1].second;
  return i + jq + nsum + (q - r);
}

}  // namespace

int beta_of(const Blocks& b, int q, int i, int l) {
  const int k1 = static_cast<int>(b.jn.size());
  if (q < 1 || q > k1) throw std::out_of_range("factor index");
  const int n_q = b.jn[q - 1].second;
  if (i < 0 || i > n_q || l < 1 || l > n_q || i + l > n_q + 1)
    throw std::out_of_range("operator indices");
  if (q == 1) return 1;
  int beta = 0;
  for (int r = 1; r <= q; ++r) {
    // j_0 is treated as infinity
    if (r == 1 || j_of(b, q, i, r) <= b.jn[r - 2].first) beta = r;
  }
  return beta;
}

int face_sign(const Blocks& b, int q, int i, int l) {
  const int beta = beta_of(b, q, i, l);
  int eps1 = (i + 1) * l;
  for (int r = 1; r <= q - 1; ++r) eps1 += b.jn[r - 1].second;
  int eps2 = 0;
  if (beta != q) {
    int nsum = 0;
    for (int r = beta; r <= q - 1; ++r) nsum += b.jn[r - 1].second;
    eps2 = (l - 1) * nsum;
  }
  return ((eps1 + eps2) % 2 == 0) ? 1 : -1;
}

Chain boundary(const Tree& t) {
  Chain out;
  const std::vector<NodeInfo> factors = factor_order(t);
  const Blocks b = blocks_of(t);
  for (int q = 1; q <= static_cast<int>(factors.size()); ++q) {
    const NodeInfo& node = factors[q - 1];
    const int n_q = node.arity - 2;
    for (int i = 0; i <= n_q; ++i) {
      for (int l = 1; l <= n_q && i + l <= n_q + 1; ++l) {
        out.add(surgery(t, node.path, i, l), face_sign(b, q, i, l));
      }
    }
  }
  out.normalize();
  return out;
}

Chain boundary(const Chain& c) {
  Chain out;
  for (const auto& [t, coeff] : c.terms) {
    Chain d = boundary(t);
    for (auto& [u, c2] : d.terms) out.add(u, coeff * c2);
  }
  out.normalize();
  return out;
}

TensorChain tensor_boundary(const TensorChain& tc) {
  TensorChain out;
  for (const auto& [pair, coeff] : tc.terms) {
    const auto& [l, r] = pair;
    Chain dl = boundary(l);
    for (auto& [u, c2] : dl.terms) out.add(u, r, coeff * c2);
    const long long sgn = (l.dim() % 2 == 0) ? 1 : -1;
    Chain dr = boundary(r);
    for (auto& [u, c2] : dr.terms) out.add(l, u, sgn * coeff * c2);
  }
  out.normalize();
  return out;
}

}  // namespace assoc
