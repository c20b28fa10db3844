#include "assoc/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace assoc {

namespace {

// Rewrites exchange the adjacent pair (first = w.ops[pos], second =
// w.ops[pos+1]); in display order the second operator is the left one.
struct Pair {
  FaceOp first;   // applied earlier
  FaceOp second;  // applied later
};

std::optional<Pair> rewritten_pair(const Pair& p, Rule rule, bool forward) {
  const FaceOp& R = p.first;   // display right
  const FaceOp& L = p.second;  // display left
  switch (rule) {
    case Rule::one:
      if (forward) {
        // d^p d^q = d^{q+1} d^p, p < q: the later operator targets an
        // earlier factor, so commuting it shifts the other superscript up.
        if (L.q < R.q) return Pair{L, FaceOp{R.q + 1, R.i, R.l}};
        return std::nullopt;
      }
      if (L.q >= R.q + 2) return Pair{FaceOp{L.q - 1, L.i, L.l}, R};
      return std::nullopt;
    case Rule::two:
      if (forward) {
        if (L.q == R.q + 1 && L.i <= R.i && R.i <= L.i + L.l)
          return Pair{FaceOp{R.q, L.i, L.l + R.l}, FaceOp{R.q, R.i - L.i, R.l}};
        return std::nullopt;
      }
      if (L.q == R.q && R.l > L.l && L.i <= R.l - L.l)
        return Pair{FaceOp{R.q, L.i + R.i, L.l}, FaceOp{R.q + 1, R.i, R.l - L.l}};
      return std::nullopt;
    case Rule::three:
      if (forward) {
        if (L.q == R.q + 1 && R.i < L.i)
          return Pair{FaceOp{R.q, L.i + R.l, L.l}, FaceOp{L.q, R.i, R.l}};
        return std::nullopt;
      }
      // right-to-left reading of (3) is the printed reading of (3')
      return rewritten_pair(p, Rule::three_prime, true);
    case Rule::three_prime:
      if (forward) {
        if (L.q == R.q + 1 && R.i > L.i + L.l)
          return Pair{FaceOp{R.q, L.i, L.l}, FaceOp{L.q, R.i - L.l, R.l}};
        return std::nullopt;
      }
      return rewritten_pair(p, Rule::three, true);
  }
  return std::nullopt;
}

std::optional<Word> guarded(const Word& w, int pos, const Pair& repl) {
  Word out = w;
  out.ops[pos] = repl.first;
  out.ops[pos + 1] = repl.second;
  if (!is_admissible(out)) return std::nullopt;
  // A rewritten pair denotes the same face but may swap the creation order of
  // two disjoint blocks, so a later operator aimed at one of those slots would
  // land on the other block.  Such a site is not a valid application.
  if (!(evaluate(out) == evaluate(w))) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Word> try_rewrite(const Word& w, const Rewrite& r) {
  if (r.pos < 0 || r.pos + 1 >= static_cast<int>(w.ops.size())) return std::nullopt;
  Pair p{w.ops[r.pos], w.ops[r.pos + 1]};
  auto repl = rewritten_pair(p, r.rule, r.forward);
  if (!repl) return std::nullopt;
  return guarded(w, r.pos, *repl);
}

std::vector<Rewrite> applicable_rewrites(const Word& w) {
  std::vector<Rewrite> out;
  const int m = static_cast<int>(w.ops.size());
  for (int pos = 0; pos + 1 < m; ++pos) {
    for (Rule rule : {Rule::two, Rule::three, Rule::three_prime, Rule::one}) {
      for (bool forward : {true, false}) {
        // backward (3)/(3') repeat forward (3')/(3); skip the duplicates
        if (!forward && (rule == Rule::three || rule == Rule::three_prime))
          continue;
        Rewrite r{rule, forward, pos};
        if (try_rewrite(w, r)) out.push_back(r);
      }
    }
  }
  return out;
}

Word apply_relation(const Word& w, int site, Rule rule) {
  auto out = try_rewrite(w, Rewrite{rule, true, site});
  if (!out) throw std::invalid_argument("relation does not apply at the site");
  return *out;
}

bool is_first_form_word(const Word& w) { return is_type1(w); }
bool is_second_form_word(const Word& w) { return is_type2(w); }

namespace {

std::vector<int> word_key(const Word& w) {
  std::vector<int> k;
  k.reserve(w.ops.size() * 3);
  for (const FaceOp& op : w.ops) {
    k.push_back(op.q);
    k.push_back(op.i);
    k.push_back(op.l);
  }
  return k;
}

}  // namespace

Word rewrite_to_first_form(const Word& w, std::size_t max_states) {
  if (!is_admissible(w)) throw std::invalid_argument("inadmissible composition");
  if (is_first_form_word(w)) return w;
  std::map<std::vector<int>, bool> seen;
  seen[word_key(w)] = true;
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (const Rewrite& r : applicable_rewrites(cur)) {
      Word nxt = *try_rewrite(cur, r);
      auto key = word_key(nxt);
      if (seen.count(key)) continue;
      if (is_first_form_word(nxt)) return nxt;
      seen[key] = true;
      if (seen.size() > max_states)
        throw std::runtime_error("rewrite search exceeded the state budget");
      queue.push_back(std::move(nxt));
    }
  }
  throw std::runtime_error("no first-form word reachable by guarded rewrites");
}

RewriteClosure explore_rewrites(const Word& w, std::size_t max_states,
                                bool check_face) {
  if (!is_admissible(w)) throw std::invalid_argument("inadmissible composition");
  RewriteClosure res;
  const Tree face = evaluate(w);
  std::map<std::vector<int>, bool> seen;
  seen[word_key(w)] = true;
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    ++res.explored;
    if (check_face && !(evaluate(cur) == face)) res.face_mismatch = true;
    if (is_first_form_word(cur)) res.first_forms.push_back(cur);
    for (const Rewrite& r : applicable_rewrites(cur)) {
      Word nxt = *try_rewrite(cur, r);
      auto key = word_key(nxt);
      if (seen.count(key)) continue;
      seen[key] = true;
      if (seen.size() > max_states) {
        res.truncated = true;
        continue;
      }
      queue.push_back(std::move(nxt));
    }
  }
  return res;
}

Word random_admissible_word(int ambient, int length, std::mt19937& rng) {
  Word w;
  w.ambient = ambient;
  // arity of each block in the evolving factor list (creation slots)
  std::vector<int> arity{ambient};
  for (int step = 0; step < length; ++step) {
    // collect every legal (q,i,l) and draw one uniformly
    std::vector<FaceOp> moves;
    for (int q = 1; q <= static_cast<int>(arity.size()); ++q) {
      const int n_q = arity[q - 1] - 2;
      for (int i = 0; i <= n_q; ++i)
        for (int l = 1; l <= n_q && i + l <= n_q + 1; ++l)
          moves.push_back(FaceOp{q, i, l});
    }
    if (moves.empty()) break;  // reached a vertex
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    const FaceOp op = moves[pick(rng)];
    w.ops.push_back(op);
    arity[op.q - 1] -= op.l;
    arity.insert(arity.begin() + (op.q - 1), op.l + 1);
  }
  return w;
}

}  // namespace assoc
