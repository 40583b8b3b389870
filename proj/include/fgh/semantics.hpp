#ifndef FGH_SEMANTICS_HPP
#define FGH_SEMANTICS_HPP

#include <cstdint>
#include <map>
#include <string>

#include "fgh/formula.hpp"
#include "fgh/nat.hpp"
#include "fgh/theory.hpp"

namespace fgh {

using Env = std::map<std::string, Nat>;

enum class Truth { True, False, Unknown };

std::string to_string(Truth t);

// Fuel-bounded three-valued verdict. True/False are certain and stable under
// fuel increase; Unknown records an exhausted search. fuel_used is the
// largest witness index any search examined (diagnostic only).
struct Verdict {
  Truth value = Truth::Unknown;
  uint64_t fuel_used = 0;
};

// Standard interpretation over NN; exp(x) = 2^x. The code-builder symbols
// evaluate through the coding module and throw EvalError on invalid codes.
Nat eval_term(const TermPtr& t, const Env& env);

// Total, exact truth for Delta0 formulas (all quantifiers bounded; proof
// atoms decided by the checker). Rejects non-Delta0 input.
bool eval_delta0(const FormulaPtr& f, const Env& env,
                 const TheoryRegistry& reg = TheoryRegistry::builtin());

// Three-valued evaluation of sentences. Unbounded existentials search
// witness values in [0, fuel], with two sound refinements documented in the
// README: definitional witnesses (E z. z = t & ...) are propagated exactly,
// and E p. Proof[T](p, t) with closed t delegates to bounded proof search
// with budget = fuel.
Verdict eval_with_fuel(const FormulaPtr& f, uint64_t fuel,
                       const TheoryRegistry& reg = TheoryRegistry::builtin());

// The partial truth predicate for level-(n+1) sentences: same contract as
// eval_with_fuel but the input must classify within Sigma1Class(n+1).
Verdict true_sigma(const FormulaPtr& f, int n, uint64_t fuel,
                   const TheoryRegistry& reg = TheoryRegistry::builtin());

}  // namespace fgh

#endif
