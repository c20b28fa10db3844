#pragma once

#include <optional>
#include <random>
#include <vector>

#include "assoc/composition.hpp"

namespace assoc {

// The relations between adjacent face operators, read left-to-right as
// printed.  In display order (left operator applied second):
//   (1)  d^p d^q           = d^{q+1} d^p                       p < q
//   (2)  d^{q+1}_(a,s) d^q_(b,t) = d^q_(b-a,t) d^q_(a,s+t)     a <= b <= a+s
//   (3)  d^{q+1}_(a,s) d^q_(b,t) = d^{q+1}_(b,t) d^q_(a+t,s)   b < a
//   (3') d^{q+1}_(a,s) d^q_(b,t) = d^{q+1}_(b-s,t) d^q_(a,s)   b > a+s
// (3') is (3) solved for the other side, so each relation can also be read
// right-to-left; rewrites() enumerates every direction.
enum class Rule { one, two, three, three_prime };

struct Rewrite {
  Rule rule;
  bool forward = true;  // printed left-to-right reading
  int pos = 0;          // application-order index of the earlier operator
};

// A rewrite is applicable when its pattern and side condition hold at the
// site AND the rewritten word is still admissible: positional superscripts
// make a literal relation instance meaningless when the insertion position
// of a new factor crosses the other operator's factor index, so the
// admissibility guard is part of the definition used here.
std::vector<Rewrite> applicable_rewrites(const Word& w);
std::optional<Word> try_rewrite(const Word& w, const Rewrite& r);

// The printed left-to-right reading at a display site, as a direct call.
// site counts adjacent pairs in application order (0-based earlier index).
Word apply_relation(const Word& w, int site, Rule rule);

bool is_first_form_word(const Word& w);
bool is_second_form_word(const Word& w);

// Shortest rewrite path to the first fundamental form (breadth-first over
// guarded rewrites, sites tried left to right with priority (2) > (3)/(3')
// > (1) on each level).  Throws if no first-form word is reachable within
// `max_states` distinct words.
Word rewrite_to_first_form(const Word& w, std::size_t max_states = 200000);

// Full reachability closure over guarded rewrites; the confluence check
// asserts first_forms holds exactly one word.  When `check_face` is set,
// every visited word is evaluated and compared against the start face.
struct RewriteClosure {
  std::vector<Word> first_forms;
  std::size_t explored = 0;
  bool truncated = false;
  bool face_mismatch = false;
};
RewriteClosure explore_rewrites(const Word& w, std::size_t max_states = 200000,
                                bool check_face = true);

// Uniformly random admissible composition: repeatedly applies a random
// valid operator to a random factor.  Used by the randomized suites.
Word random_admissible_word(int ambient, int length, std::mt19937& rng);

}  // namespace assoc
