#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "assoc/ainfty.hpp"

namespace assoc {

// A finite graded module with integer structure constants for a family of
// operations of one kind: comultiplications ψ^k : M -> M^(x)k or
// multiplications φ^k : M^(x)k -> M, each of degree k-2.  Operations are
// stored sparsely as entries on basis words.

using BasisWord = std::vector<int>;          // basis indices
using Combo = std::map<BasisWord, long long>;  // integer combination of words

struct ModuleEntry {
  BasisWord in;   // coalgebra: one index; algebra: arity indices
  BasisWord out;  // coalgebra: arity indices; algebra: one index
  long long coeff = 0;
  bool operator==(const ModuleEntry&) const = default;
};

struct ModuleOp {
  int arity = 1;
  std::vector<ModuleEntry> entries;
  bool operator==(const ModuleOp&) const = default;
};

struct GradedModuleInstance {
  std::string name;
  OpKind kind = OpKind::coalgebra;
  std::vector<std::string> basis;  // element names, unique
  std::vector<int> degree;         // degree per element
  std::vector<ModuleOp> ops;       // ascending arity, at most one per arity

  bool operator==(const GradedModuleInstance&) const = default;
  int index_of(std::string_view name) const;  // -1 when absent
  const ModuleOp* op(int arity) const;        // nullptr when absent
};

// Structural checks: nonempty parseable names, unique basis, entry word
// lengths matching kind and arity, indices in range, nonzero coefficients,
// and the degree law deg(out) - deg(in) = arity - 2 on every entry.
// Throws std::invalid_argument on the first violation.
void validate(const GradedModuleInstance& m);

// Text form, one declaration per line with '#' comments:
//   module <name>
//   kind algebra|coalgebra
//   basis <name> <degree>
//   op <arity> <in names> -> <out names> ; <coeff>
// parse_module validates; serialize_module emits this exact shape.
GradedModuleInstance parse_module(std::string_view text);
std::string serialize_module(const GradedModuleInstance& m);

// Built-in instances.
GradedModuleInstance builtin_dgc();                 // differential graded coalgebra
GradedModuleInstance builtin_truncated_dga();       // truncated graded algebra
GradedModuleInstance builtin_broken_dga();          // non-associative control
GradedModuleInstance builtin_homotopy_coalgebra();  // nonzero psi^2 and psi^3
GradedModuleInstance builtin_homotopy_algebra();    // nonzero phi^2 and phi^3

// Evaluate a composite on a basis word with Koszul signs: operators apply
// back to front; a positioned operator of arity k skips an i-slot prefix at
// the cost (-1)^{(k-2) deg(prefix)}.  Word widths must match the operator
// offsets exactly.  Absent arities act as zero.
Combo evaluate(const Composite& c, const GradedModuleInstance& m,
               const BasisWord& input);

// Evaluate a single-module expression (relations): the signed sum of its
// term composites.  Rejects tensor expressions.
Combo evaluate(const OpExpr& e, const GradedModuleInstance& m,
               const BasisWord& input);

// All inputs on which a quadratic relation evaluates to something nonzero,
// with the nonzero values.  Empty means the relation holds.  The algebra
// side is computed on the support of the stored entries, so it stays sparse
// even for wide inputs.
std::map<BasisWord, Combo> relation_defect(const OpExpr& relation,
                                           const GradedModuleInstance& m);

// The tensor product instance on pair elements (a,b) with degrees added,
// carrying the operations generated by the diagonal up to the given arity.
// Both factors must share a kind; entries are fully expanded and summed,
// empty arities are omitted.
GradedModuleInstance tensor_module(const GradedModuleInstance& a,
                                   const GradedModuleInstance& b,
                                   int max_arity);

// Differentials on words of (de)suspended elements.  apply_bar acts on a
// word x_1..x_n for an algebra instance:
//   sum_{k,i} (-1)^{[(n-k)/2] + i(k+1) + s} x_1.. φ^k(x_{i+1}..x_{i+k}) ..x_n
// where s collects the suspension bookkeeping: lowering all n inputs costs
// sum_j (deg x_j + 1)(n - j), the positioned operator costs
// (k-2) deg(x_1..x_i), and raising the m = n-k+1 outputs y_1..y_m costs
// sum_j deg(y_j)(m - j).  apply_cobar is the coalgebra mirror with leading
// exponent [n/2] + i(k+1) + k(n+1), raising cost sum_j (deg x_j - 1)(n - j)
// on the inputs and lowering cost sum_j deg(y_j)(m - j) on the m = n+k-1
// outputs.
Combo apply_bar(const GradedModuleInstance& m, const BasisWord& word);
Combo apply_cobar(const GradedModuleInstance& m, const BasisWord& word);

// Tabulated differential on every word of length 1..max_length.
using WordDifferential = std::map<BasisWord, Combo>;
WordDifferential bar_differential(const GradedModuleInstance& m,
                                  int max_length);
WordDifferential cobar_differential(const GradedModuleInstance& m,
                                    int max_length);

// Check d(d(w)) = 0 for every tabulated word whose image stays within the
// table.  Throws std::invalid_argument when no word can be certified.  On
// failure, `witness` is the first word (in map order) with d^2(w) != 0.
struct SquareZeroResult {
  bool ok = true;
  int certified = 0;
  BasisWord witness;
};
SquareZeroResult check_square_zero(const WordDifferential& d, int max_length);

}  // namespace assoc
