#ifndef FGH_BOXES_HPP
#define FGH_BOXES_HPP

#include "fgh/formula.hpp"
#include "fgh/theory.hpp"

namespace fgh {

// Provability-predicate formula constructors. Each returns a formula whose
// single free variable (default "v") stands for the code of the sentence
// under the box.

// E p. Proof[T](p, v) - plain provability, a SigmaBang(1) formula.
FormulaPtr box_formula(const TheorySpec& theory, const std::string& v = "v");

// E p. OProof[T;n](p, v) - provability from true level-(n+1) oracle
// sentences; Sigma1Class(n+1).
FormulaPtr oracle_box_formula(const TheorySpec& theory, int n, const std::string& v = "v");

// Graded provability by recursion on consistency statements:
//   level 0:  box
//   level n+1: box(v) \/ E w. OR_{m<=n} (dia_m(w) /\ box over code of (dia_m(wbar) -> decode(v)))
// where dia_m is the negated level-m box.
FormulaPtr boxbox_formula(const TheorySpec& theory, int n, const std::string& v = "v");

// The single-disjunct recursion (predecessor level only).
FormulaPtr boxbox_old_formula(const TheorySpec& theory, int n, const std::string& v = "v");

// The negated-box template dia_n with free code variable v.
FormulaPtr boxbox_dual_formula(const TheorySpec& theory, int n, const std::string& v = "v");

// Provability with at most n nestings of the omega rule:
//   level 0:  box
//   level n+1: E g. ((A x. omega_n at sub(g, code "x", x)) /\ box over code of ((A x. decode-at-x(g)) -> decode(v)))
FormulaPtr omega_box_formula(const TheorySpec& theory, int n, const std::string& v = "v");

}  // namespace fgh

#endif
