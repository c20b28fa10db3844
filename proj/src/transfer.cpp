#include "assoc/transfer.hpp"

#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace assoc {

namespace {

// 1-based view of a word's operator data: i(j), l(j) and the partial sums
// l_(u) = l_1 + ... + l_u of the input word being transferred.
struct Indexed {
  const Word& w;
  int m;

  explicit Indexed(const Word& word)
      : w(word), m(static_cast<int>(word.ops.size())) {}
  int i(int j) const { return w.ops[j - 1].i; }
  int l(int j) const { return w.ops[j - 1].l; }
  int lsum(int u) const {
    int s = 0;
    for (int j = 1; j <= u; ++j) s += l(j);
    return s;
  }
};

void require_form(const Word& w, int k, bool first) {
  const int m = static_cast<int>(w.ops.size());
  if (k < 1 || k > m) throw std::invalid_argument("transfer index out of range");
  if (first ? !is_type1(w) : !is_type2(w))
    throw std::invalid_argument(first
                                    ? "word is not in first fundamental form"
                                    : "word is not in second fundamental form");
}

TransferResult left_result(const Word& w, std::vector<FaceOp> ops) {
  Word out;
  out.ambient = w.ambient;
  out.ops = std::move(ops);
  FaceOp pivot = out.ops.back();
  return {std::move(out), pivot};
}

TransferResult right_result(const Word& w, std::vector<FaceOp> ops) {
  Word out;
  out.ambient = w.ambient;
  out.ops = std::move(ops);
  FaceOp pivot = out.ops.front();
  return {std::move(out), pivot};
}

}  // namespace

TransferResult left_transfer_first(const Word& w, int k) {
  require_form(w, k, true);
  const Indexed x(w);
  const int m = x.m;
  std::vector<FaceOp> ops;
  ops.reserve(m);
  for (int j = 1; j < k; ++j) ops.push_back({j, x.i(j), x.l(j)});
  if (k < m && x.i(k + 1) + x.l(k + 1) >= x.i(k)) {
    // Operator k is absorbed by its successor and recovered on top with
    // its start taken relative to the merged block.
    ops.push_back({k, x.i(k + 1), x.l(k + 1) + x.l(k)});
    for (int j = k + 2; j <= m; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
    ops.push_back({k, x.i(k) - x.i(k + 1), x.l(k)});
  } else {
    // Slide operator k past its successors; it comes to rest after the
    // smallest q whose successor block would absorb it, or after all of
    // them when there is no such q (which covers k = m: the word is
    // returned unchanged).
    int q = 0;
    for (int c = k + 1; c + 1 <= m; ++c)
      if (x.i(k) <= x.i(c + 1) + x.lsum(c + 1) - x.lsum(k)) {
        q = c;
        break;
      }
    if (q != 0) {
      for (int j = k + 1; j <= q; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
      ops.push_back({q, x.i(q + 1), x.l(q + 1) + x.l(k)});
      for (int j = q + 2; j <= m; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
      ops.push_back({q, x.i(k) - x.i(q + 1) + x.lsum(k) - x.lsum(q), x.l(k)});
    } else {
      for (int j = k + 1; j <= m; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
      ops.push_back({m, x.i(k) + x.lsum(k) - x.lsum(m), x.l(k)});
    }
  }
  return left_result(w, std::move(ops));
}

TransferResult left_transfer_second(const Word& w, int k) {
  require_form(w, k, false);
  const Indexed x(w);
  const int m = x.m;
  std::vector<FaceOp> ops;
  ops.reserve(m);
  for (int j = 1; j < k; ++j) ops.push_back({j, x.i(j), x.l(j)});
  if (k < m && x.i(k + 1) <= x.i(k)) {
    ops.push_back({k, x.i(k + 1), x.l(k + 1) + x.l(k)});
    for (int j = k + 2; j <= m; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
    ops.push_back({k, x.i(k) - x.i(k + 1), x.l(k)});
  } else {
    // Sliding left shifts the starts of the operators passed over, since
    // in second form they address positions to the right of block k.
    int q = 0;
    for (int c = k + 1; c + 1 <= m; ++c)
      if (x.i(k) >= x.i(c + 1)) {
        q = c;
        break;
      }
    if (q != 0) {
      for (int j = k + 1; j <= q; ++j)
        ops.push_back({j - 1, x.i(j) + x.l(k), x.l(j)});
      ops.push_back({q, x.i(q + 1), x.l(q + 1) + x.l(k)});
      for (int j = q + 2; j <= m; ++j) ops.push_back({j - 1, x.i(j), x.l(j)});
      ops.push_back({q, x.i(k) - x.i(q + 1), x.l(k)});
    } else {
      for (int j = k + 1; j <= m; ++j)
        ops.push_back({j - 1, x.i(j) + x.l(k), x.l(j)});
      ops.push_back({m, x.i(k), x.l(k)});
    }
  }
  return left_result(w, std::move(ops));
}

TransferResult right_transfer_first(const Word& w, int k) {
  require_form(w, k, true);
  const Indexed x(w);
  const int m = x.m;
  // Greatest 1 < p <= k with i_p + l_(p) <= i_k + l_(k) < i_{p-1} + l_(p-1):
  // the operators p..k close over a common span and extract as one block.
  int p = 0;
  for (int c = k; c >= 2; --c)
    if (x.i(c) + x.lsum(c) <= x.i(k) + x.lsum(k) &&
        x.i(k) + x.lsum(k) < x.i(c - 1) + x.lsum(c - 1)) {
      p = c;
      break;
    }
  std::vector<FaceOp> ops;
  ops.reserve(m);
  if (p != 0) {
    const int l = x.lsum(k) - x.lsum(p - 1);
    ops.push_back({1, x.i(k), l});
    for (int j = p; j < k; ++j) ops.push_back({j - p + 1, x.i(j) - x.i(k), x.l(j)});
    for (int j = 1; j < p; ++j) ops.push_back({k - p + 1 + j, x.i(j) - l, x.l(j)});
  } else {
    ops.push_back({1, x.i(k), x.lsum(k)});
    for (int j = 1; j < k; ++j) ops.push_back({j, x.i(j) - x.i(k), x.l(j)});
  }
  for (int j = k + 1; j <= m; ++j) ops.push_back({j, x.i(j), x.l(j)});
  return right_result(w, std::move(ops));
}

TransferResult right_transfer_second(const Word& w, int k) {
  require_form(w, k, false);
  const Indexed x(w);
  const int m = x.m;
  // Greatest 1 < p <= k with i_{p-1} < i_k <= i_p.
  int p = 0;
  for (int c = k; c >= 2; --c)
    if (x.i(c - 1) < x.i(k) && x.i(k) <= x.i(c)) {
      p = c;
      break;
    }
  std::vector<FaceOp> ops;
  ops.reserve(m);
  if (p != 0) {
    ops.push_back({1, x.i(k) + x.lsum(p - 1), x.lsum(k) - x.lsum(p - 1)});
    for (int j = p; j < k; ++j) ops.push_back({j - p + 1, x.i(j) - x.i(k), x.l(j)});
    for (int j = 1; j < p; ++j) ops.push_back({k - p + 1 + j, x.i(j), x.l(j)});
  } else {
    ops.push_back({1, x.i(k), x.lsum(k)});
    for (int j = 1; j < k; ++j) ops.push_back({j, x.i(j) - x.i(k), x.l(j)});
  }
  for (int j = k + 1; j <= m; ++j) ops.push_back({j, x.i(j), x.l(j)});
  return right_result(w, std::move(ops));
}

namespace {

// Width of left block k, extended to the phantom block q+1 that absorbs
// the remaining n+1-l'_(q) leaves.
int block_width(const DiagonalSolution& s, int k) {
  return s.lp_sum(k) - s.lp_sum(k - 1);
}

void require_block(const DiagonalSolution& s, int k, int m) {
  if (k < 1 || k > s.q + 1)
    throw std::invalid_argument("selection block out of range");
  if (m < 0 || m >= block_width(s, k))
    throw std::invalid_argument("selection offset out of range");
}

}  // namespace

int selection_z(const DiagonalSolution& s, int k, int m) {
  require_block(s, k, m);
  if (k == 1) return s.p + 1 - s.ip_at(1) - m;
  const int target = s.ip_at(k) + m;
  int kj = k - 1;
  for (int j = 1; j <= s.q + 2; ++j) {
    // Matching by value takes precedence: when block kj sits strictly left
    // of the target offset, the paired operator is the one starting at
    // eps_{kj} - i'_{kj} + (i'_k + m).  The walk bottoms out at kj = 0,
    // where the base sentinels eps_0 = i'_0 = 0 make the value the offset
    // itself.
    const int ipkj = kj >= 1 ? s.ip_at(kj) : 0;
    if (ipkj < target) {
      const int value = (kj >= 1 ? s.eps_at(kj) : 0) - ipkj + target;
      for (int r = 1; r <= s.p; ++r)
        if (s.i_at(r) == value) return r;
    }
    // Otherwise operator t_{kj} may absorb the offset directly.  An empty
    // constraint set (t = 0) stands for the phantom rightmost operator
    // (i_{p+1}, l_{p+1}) = (0, n+1-l_(p)), which absorbs offset 0.
    int t = kj >= 1 ? s.t(kj) : 0;
    if (t == 0) t = s.p + 1;
    const int next = s.o_prime(t);
    if (s.i_at(t) - s.lp_sum(next) == target) return t;
    if (kj == 0) break;
    if (next >= kj) throw std::logic_error("selection walk must descend");
    kj = next;
  }
  throw std::logic_error("selection walk did not terminate");
}

SelectionCheck selection_check(const DiagonalSolution& s, int k, int m) {
  return selection_check_at(s, k, m, selection_z(s, k, m));
}

SelectionCheck selection_check_at(const DiagonalSolution& s, int k, int m,
                                  int z) {
  require_block(s, k, m);
  SelectionCheck rep;
  rep.z = z;
  const int target = s.ip_at(k) + m;
  const int ok = s.o(k);
  const int opz = s.o_prime(z);

  rep.above_o = z > ok;
  rep.span_reaches = s.i_at(z) + s.l_sum(z) - s.l_sum(ok) >= s.eps_at(k);
  rep.pivot_equality = target == s.i_at(z) - s.lp_sum(opz);
  rep.between_bound = true;
  for (int r = opz + 1; r < k; ++r)
    if (target > s.ip_at(r)) rep.between_bound = false;

  rep.tight_case = true;
  const int tk = s.t(k);
  if (tk != 0) {
    int low = s.i_at(tk) - s.lp_sum(s.o_prime(tk));
    for (int r = s.o_prime(tk) + 1; r < k; ++r)
      if (s.ip_at(r) < low) low = s.ip_at(r);
    if (target > low) {
      const bool tight =
          z < tk && s.i_at(z) + s.l_sum(z) - s.l_sum(ok) == s.eps_at(k);
      int max_o = 0;
      for (int r = 1; r < z; ++r)
        if (s.i_at(r) > s.i_at(z) + s.l_sum(z) - s.l_sum(r)) max_o = r;
      int max_op = 0;
      for (int r = 1; r < k; ++r)
        if (s.ip_at(r) < target) max_op = r;
      rep.tight_case = tight && ok == max_o && opz == max_op;
    }
  }
  return rep;
}

std::optional<std::pair<int, int>> common_facet(const Word& first,
                                                const Word& second) {
  if (first.ambient != second.ambient)
    throw std::invalid_argument("words act on different corollas");
  if (!is_type1(first))
    throw std::invalid_argument("word is not in first fundamental form");
  if (!is_type2(second))
    throw std::invalid_argument("word is not in second fundamental form");
  std::set<std::pair<int, int>> facets;
  for (int k = 1; k <= static_cast<int>(second.ops.size()); ++k) {
    const FaceOp piv = right_transfer_second(second, k).pivot;
    facets.insert({piv.i, piv.l});
  }
  for (int k = 1; k <= static_cast<int>(first.ops.size()); ++k) {
    const FaceOp piv = right_transfer_first(first, k).pivot;
    if (facets.count({piv.i, piv.l})) return std::pair<int, int>{piv.i, piv.l};
  }
  return std::nullopt;
}

}  // namespace assoc
