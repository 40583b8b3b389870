#ifndef FGH_THEORY_HPP
#define FGH_THEORY_HPP

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "fgh/formula.hpp"

namespace fgh {

// A computably enumerable theory presented by a decidable axiom recognizer.
// The name is load-bearing: Proof/OProof atoms refer to theories by name and
// the registry rebuilds the recognizer from the name alone, so evaluation of
// decoded formulas stays self-contained.
struct TheorySpec {
  std::string name;
  std::function<bool(const FormulaPtr&)> recognizes;
};

class TheoryRegistry {
 public:
  // Built-ins:
  //   pure   - logic only, no nonlogical axioms
  //   toyEA  - every NN-true closed Delta0 sentence, a finite list of
  //            universally closed defining laws, and Delta0-induction
  //            instances up to a size cap
  // Extensions: "<base>+{c1,c2,...}" adds the sentences with codes ci.
  static const TheoryRegistry& builtin();

  TheorySpec resolve(const std::string& name) const;  // throws EvalError on unknown
  TheorySpec extend(const TheorySpec& base, const std::vector<FormulaPtr>& extra) const;
};

// Number of AST nodes; used for the induction-instance size cap and by tests.
size_t formula_size(const FormulaPtr& f);

}  // namespace fgh

#endif
