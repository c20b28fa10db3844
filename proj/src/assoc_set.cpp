#include "assoc/assoc_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "assoc/diagonal.hpp"

namespace assoc {

namespace {

// j(q,r): the leaf offset the new factor carries when filed at position r.
int j_of(const Blocks& b, int q, int i, int r) {
  const int jq = b.jn[q - 1].first;
  if (r == q) return i + jq;
  int nsum = 0;
  for (int s = r; s <= q - 1; ++s) nsum += b.jn[s - 1].second;
  return i + jq + nsum + (q - r);
}

// Insert one degeneracy, applied outermost, into a canonical list:
// distinct levels commute, and on the same level s_j s_j' = s_{j'+1} s_j
// whenever j <= j', so the newcomer bubbles inward past every op it
// precedes, bumping the slot of each same-level op it passes.
void insert_deg(std::vector<DegOp>& degs, DegOp op) {
  std::size_t pos = degs.size();
  while (pos > 0) {
    DegOp& prev = degs[pos - 1];
    if (prev.q > op.q) {
      --pos;
    } else if (prev.q == op.q && op.j <= prev.j) {
      prev.j += 1;
      --pos;
    } else {
      break;
    }
  }
  degs.insert(degs.begin() + pos, op);
}

bool op_triple_less(const FaceOp& a, const FaceOp& b) {
  return std::tie(a.q, a.i, a.l) < std::tie(b.q, b.i, b.l);
}

void check_generator(const FreeAssocSet& s, int g) {
  if (g < 0 || g >= static_cast<int>(s.generator_dims.size()))
    throw std::invalid_argument("no such generator");
}

}  // namespace

bool cell_less(const SetCell& a, const SetCell& b) {
  if (a.generator != b.generator) return a.generator < b.generator;
  if (a.faces.ambient != b.faces.ambient)
    return a.faces.ambient < b.faces.ambient;
  if (a.faces.ops.size() != b.faces.ops.size())
    return a.faces.ops.size() < b.faces.ops.size();
  for (std::size_t r = 0; r < a.faces.ops.size(); ++r) {
    if (!(a.faces.ops[r] == b.faces.ops[r]))
      return op_triple_less(a.faces.ops[r], b.faces.ops[r]);
  }
  if (a.degs.size() != b.degs.size()) return a.degs.size() < b.degs.size();
  for (std::size_t r = 0; r < a.degs.size(); ++r) {
    if (!(a.degs[r] == b.degs[r]))
      return std::tie(a.degs[r].q, a.degs[r].j) <
             std::tie(b.degs[r].q, b.degs[r].j);
  }
  return false;
}

std::string to_string(const SetCell& c) {
  std::string out;
  for (auto it = c.degs.rbegin(); it != c.degs.rend(); ++it)
    out += "s^" + std::to_string(it->q) + "_" + std::to_string(it->j) + " ";
  if (!c.faces.ops.empty()) out += to_string(c.faces) + " ";
  out += "g" + std::to_string(c.generator);
  return out;
}

bool is_valid_multi_index(const Blocks& b) {
  if (b.jn.empty()) return false;
  int nsum = 0;
  for (const auto& [j, n] : b.jn) {
    if (j < 0 || n < 0) return false;
    nsum += n;
  }
  for (std::size_t r = 0; r + 1 < b.jn.size(); ++r)
    if (b.jn[r].first < b.jn[r + 1].first) return false;
  if (b.jn.back().first != 0) return false;
  const int n = static_cast<int>(b.jn.size()) - 1 + nsum;
  return b.jn.front().first <= n;
}

int multi_index_k(const Blocks& b) { return static_cast<int>(b.jn.size()) - 1; }

int multi_index_dim(const Blocks& b) {
  int nsum = 0;
  for (const auto& [j, n] : b.jn) nsum += n;
  return nsum;
}

int multi_index_n(const Blocks& b) {
  return multi_index_k(b) + multi_index_dim(b);
}

Blocks face_target_index(const Blocks& b, int q, int i, int l) {
  const int beta = beta_of(b, q, i, l);  // validates q, i, l
  Blocks out = b;
  out.jn[q - 1].second -= l;
  out.jn.insert(out.jn.begin() + (beta - 1), {j_of(b, q, i, beta), l - 1});
  return out;
}

Blocks degeneracy_target_index(const Blocks& b, int q, int j) {
  if (q < 1 || q > static_cast<int>(b.jn.size()))
    throw std::out_of_range("factor index");
  if (j < 1 || j > b.jn[q - 1].second + 3)
    throw std::out_of_range("degeneracy slot");
  Blocks out = b;
  out.jn[q - 1].second += 1;
  return out;
}

Blocks word_index(const Word& w) {
  if (w.ambient < 2) throw std::out_of_range("ambient leaves");
  Blocks b{{{0, w.ambient - 2}}};
  for (const FaceOp& op : w.ops) b = face_target_index(b, op.q, op.i, op.l);
  return b;
}

SetCell generator_cell(const FreeAssocSet& s, int g) {
  check_generator(s, g);
  SetCell c;
  c.generator = g;
  c.faces = Word{s.generator_dims[g] + 2, {}};
  return c;
}

SetCell cell_from_tree(const FreeAssocSet& s, int g, const Tree& t) {
  check_generator(s, g);
  if (t.leaf_count() != s.generator_dims[g] + 2)
    throw std::invalid_argument("leaf count does not match the generator");
  SetCell c;
  c.generator = g;
  c.faces = first_form(t);
  return c;
}

Tree cell_tree(const FreeAssocSet& s, const SetCell& c) {
  check_generator(s, c.generator);
  if (is_degenerate(c))
    throw std::invalid_argument("degenerate cell has no tree");
  return evaluate(c.faces);
}

bool is_degenerate(const SetCell& c) { return !c.degs.empty(); }

int cell_dim(const FreeAssocSet& s, const SetCell& c) {
  check_generator(s, c.generator);
  return s.generator_dims[c.generator] -
         static_cast<int>(c.faces.ops.size()) +
         static_cast<int>(c.degs.size());
}

std::optional<Blocks> try_cell_index(const FreeAssocSet& s, const SetCell& c) {
  check_generator(s, c.generator);
  Blocks b = word_index(c.faces);
  for (const DegOp& d : c.degs) {
    if (d.q < 1 || d.q > static_cast<int>(b.jn.size())) return std::nullopt;
    if (d.j < 1 || d.j > b.jn[d.q - 1].second + 3) return std::nullopt;
    b.jn[d.q - 1].second += 1;
  }
  return b;
}

Blocks cell_index(const FreeAssocSet& s, const SetCell& c) {
  auto b = try_cell_index(s, c);
  if (!b) throw std::domain_error("stranded degeneracy has no multi-index");
  return *b;
}

MultiIndexCell multi_index_cell(const FreeAssocSet& s, const SetCell& c) {
  return MultiIndexCell{cell_index(s, c), c.generator};
}

SetCell apply_face(const FreeAssocSet& s, const SetCell& c, int fq, int fi,
                   int fl) {
  Blocks cur = cell_index(s, c);      // std::domain_error when stranded
  (void)beta_of(cur, fq, fi, fl);     // std::out_of_range when not a face
  int i = fi;
  int l = fl;
  std::vector<DegOp> outer;           // pushed-past ops, outermost first
  int stop = -1;                      // index of an annihilated degeneracy
  for (int r = static_cast<int>(c.degs.size()) - 1; r >= 0; --r) {
    const DegOp d = c.degs[r];
    cur.jn[d.q - 1].second -= 1;      // the level as this degeneracy saw it
    const int nq = cur.jn[d.q - 1].second;
    if (fq == d.q) {
      // The four unit rows take precedence over the exchange rows.
      if (l == 1 && i == d.j - 1 && d.j < nq + 3) { stop = r; break; }
      if (l == 1 && i == d.j - 2 && d.j > 1) { stop = r; break; }
      if (i == 0 && l == nq + 1 && d.j == nq + 3) { stop = r; break; }
      if (i == 1 && l == nq + 1 && d.j == 1) { stop = r; break; }
      if (d.j > i + l + 1) {
        outer.push_back({d.q + 1, d.j - l});
      } else if (i < d.j && d.j < i + l + 2 && l > 1) {
        outer.push_back({d.q, d.j - i});
        l -= 1;
      } else if (i >= d.j && l <= nq) {
        outer.push_back({d.q + 1, d.j});
        i -= 1;
      } else {
        throw std::logic_error("face/degeneracy exchange fell through");
      }
    } else if (fq < d.q) {
      outer.push_back({d.q + 1, d.j});
    } else {
      outer.push_back({d.q, d.j});
    }
  }

  SetCell out;
  out.generator = c.generator;
  if (stop >= 0) {
    out.faces = c.faces;
    out.degs.assign(c.degs.begin(), c.degs.begin() + stop);
  } else {
    const Tree t = evaluate(c.faces);
    const std::vector<NodeInfo> factors = factor_order(t);
    out.faces = first_form(surgery(t, factors[fq - 1].path, i, l));
  }
  for (auto it = outer.rbegin(); it != outer.rend(); ++it)
    insert_deg(out.degs, *it);
  return out;
}

SetCell apply_degeneracy(const FreeAssocSet& s, const SetCell& c, int q,
                         int j) {
  const Blocks b = cell_index(s, c);  // std::domain_error when stranded
  if (q < 1 || q > static_cast<int>(b.jn.size()))
    throw std::out_of_range("factor index");
  if (j < 1 || j > b.jn[q - 1].second + 3)
    throw std::out_of_range("degeneracy slot");
  SetCell out = c;
  insert_deg(out.degs, DegOp{q, j});
  return out;
}

void SetChain::add(const SetCell& c, long long coefficient) {
  terms.emplace_back(c, coefficient);
}

void SetChain::normalize() {
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return cell_less(a.first, b.first); });
  std::vector<std::pair<SetCell, long long>> merged;
  merged.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t e = k;
    long long co = 0;
    while (e < terms.size() && terms[e].first == terms[k].first)
      co += terms[e++].second;
    if (co != 0) merged.emplace_back(terms[k].first, co);
    k = e;
  }
  terms = std::move(merged);
}

void SetTensorChain::add(const SetCell& left, const SetCell& right,
                         long long coefficient) {
  terms.push_back({{left, right}, coefficient});
}

void SetTensorChain::normalize() {
  const auto pair_less = [](const auto& a, const auto& b) {
    if (!(a.first.first == b.first.first))
      return cell_less(a.first.first, b.first.first);
    return cell_less(a.first.second, b.first.second);
  };
  std::sort(terms.begin(), terms.end(), pair_less);
  std::vector<std::pair<std::pair<SetCell, SetCell>, long long>> merged;
  merged.reserve(terms.size());
  for (std::size_t k = 0; k < terms.size();) {
    std::size_t e = k;
    long long co = 0;
    while (e < terms.size() && terms[e].first == terms[k].first)
      co += terms[e++].second;
    if (co != 0) merged.push_back({terms[k].first, co});
    k = e;
  }
  terms = std::move(merged);
}

SetChain set_boundary(const FreeAssocSet& s, const SetCell& c) {
  const Blocks b = cell_index(s, c);
  SetChain out;
  for (int q = 1; q <= static_cast<int>(b.jn.size()); ++q) {
    const int nq = b.jn[q - 1].second;
    for (int i = 0; i <= nq; ++i)
      for (int l = 1; l <= nq && i + l <= nq + 1; ++l)
        out.add(apply_face(s, c, q, i, l), face_sign(b, q, i, l));
  }
  out.normalize();
  return out;
}

SetChain set_boundary(const FreeAssocSet& s, const SetChain& ch) {
  SetChain out;
  for (const auto& [c, co] : ch.terms) {
    const SetChain d = set_boundary(s, c);
    for (const auto& [c2, co2] : d.terms) out.add(c2, co * co2);
  }
  out.normalize();
  return out;
}

SetChain project_nondegenerate(const SetChain& ch) {
  SetChain out;
  for (const auto& [c, co] : ch.terms)
    if (!is_degenerate(c)) out.add(c, co);
  out.normalize();
  return out;
}

SetTensorChain set_diagonal(const FreeAssocSet& s, const SetCell& c) {
  if (is_degenerate(c))
    throw std::invalid_argument("degenerate cell has no diagonal");
  const Tree t = cell_tree(s, c);
  SetTensorChain out;
  for (const auto& [pr, co] : diagonal(t).terms)
    out.add(cell_from_tree(s, c.generator, pr.first),
            cell_from_tree(s, c.generator, pr.second), co);
  out.normalize();
  return out;
}

std::vector<SetCell> nondegenerate_cells(const FreeAssocSet& s) {
  std::vector<std::pair<int, SetCell>> graded;
  for (int g = 0; g < static_cast<int>(s.generator_dims.size()); ++g)
    for (const Tree& t : enumerate_trees(s.generator_dims[g] + 2))
      graded.emplace_back(t.dim(), cell_from_tree(s, g, t));
  std::sort(graded.begin(), graded.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return cell_less(a.second, b.second);
  });
  std::vector<SetCell> out;
  out.reserve(graded.size());
  for (auto& [dim, c] : graded) out.push_back(std::move(c));
  return out;
}

NormalizedChains normalized_chains(const FreeAssocSet& s) {
  NormalizedChains nc;
  nc.basis = nondegenerate_cells(s);
  std::map<SetCell, int, bool (*)(const SetCell&, const SetCell&)> index(
      &cell_less);
  for (std::size_t r = 0; r < nc.basis.size(); ++r)
    index.emplace(nc.basis[r], static_cast<int>(r));
  const auto position = [&index](const SetCell& c) {
    const auto it = index.find(c);
    if (it == index.end())
      throw std::logic_error("boundary term is not a basis cell");
    return it->second;
  };
  nc.dims.reserve(nc.basis.size());
  for (const SetCell& c : nc.basis) nc.dims.push_back(cell_dim(s, c));
  nc.d.resize(nc.basis.size());
  nc.delta.resize(nc.basis.size());
  for (std::size_t r = 0; r < nc.basis.size(); ++r) {
    const SetChain d = project_nondegenerate(set_boundary(s, nc.basis[r]));
    for (const auto& [c, co] : d.terms) nc.d[r].emplace_back(position(c), co);
    const SetTensorChain dl = set_diagonal(s, nc.basis[r]);
    for (const auto& [pr, co] : dl.terms)
      nc.delta[r].emplace_back(position(pr.first), position(pr.second), co);
  }
  return nc;
}

}  // namespace assoc
