#ifndef FGH_SELFREF_HPP
#define FGH_SELFREF_HPP

#include "fgh/boxes.hpp"
#include "fgh/formula.hpp"
#include "fgh/theory.hpp"

namespace fgh {

// --- witness comparisons ---

// For phi = E x. phi0(x) and psi = E x. psi0(x):
//   wc_leq:  E x. (phi0(x) & A y < x.     ~psi0(y))
//   wc_less: E x. (phi0(x) & A y < x + 1. ~psi0(y))
// Inputs must be existentially shaped; ShapeError otherwise.
FormulaPtr wc_leq(const FormulaPtr& phi, const FormulaPtr& psi);
FormulaPtr wc_less(const FormulaPtr& phi, const FormulaPtr& psi);

// E d. (d = d & f) - explicit wrapper callers may use to give a closed
// formula the existential shape. Never applied silently.
FormulaPtr normalize_existential(const FormulaPtr& f);

// --- diagonalization ---

// Given psi with free variables among {x, y}, returns phi(y) with
//   phi(k) <-> psi(code of phi(kbar), k)  over NN
// built by the substitution-function template; the witness equations are
// definitional, so the evaluator certifies both sides.
FormulaPtr diagonal_fixpoint(const FormulaPtr& psi, const std::string& x = "x",
                             const std::string& y = "y");

// diagonal_fixpoint for a psi whose only free variable is x; the parameter
// is instantiated at 0 to yield a sentence rho with rho <-> psi(code of rho).
FormulaPtr closed_fixpoint(const FormulaPtr& psi, const std::string& x = "x");

// --- the named fixpoints ---

// rho <-> (box ~rho <= box rho)
FormulaPtr rosser_sentence(const TheorySpec& theory);

// A box predicate together with the level its witness-comparison
// bookkeeping lives at: sigma arguments must be within Sigma1Class(level+1).
struct BoxMaker {
  TheorySpec theory;
  int level = 0;            // 0 for the plain box
  FormulaPtr predicate;     // free variable "v"
  static BoxMaker plain(const TheorySpec& t);
  static BoxMaker oracle(const TheorySpec& t, int n);
};

// rho <-> (sigma <= box rho); sigma must be an existentially shaped sentence
// within Sigma1Class(level+1).
FormulaPtr fgh_fixpoint(const FormulaPtr& sigma, const BoxMaker& box);

// rho <-> (box ~rho <= sigma)
FormulaPtr dual_fixpoint_leq(const FormulaPtr& sigma, const TheorySpec& theory);
// rho <-> ~(box rho < sigma); returned literally as the negation of the
// comparison fixpoint, so the output starts with ~.
FormulaPtr dual_fixpoint_not_less(const FormulaPtr& sigma, const TheorySpec& theory);

// --- combinators over oracle boxes ---

struct OrCombination {
  FormulaPtr sigma;    // existentially normalized [n]phi \/ [n]psi
  FormulaPtr rho;      // FGH fixpoint for sigma at level n
  FormulaPtr box_rho;  // [n] applied to the code of rho
};
OrCombination or_combinator(const FormulaPtr& phi, const FormulaPtr& psi, int n,
                            const TheorySpec& theory);

// [n](phi & psi)
FormulaPtr and_combinator(const FormulaPtr& phi, const FormulaPtr& psi, int n,
                          const TheorySpec& theory);

// --- density ---

// sigma0 \/ (rho & sigma2) where rho is the Rosser sentence of
// theory + ~sigma0 + sigma2.
FormulaPtr dense_between(const FormulaPtr& sigma0, const FormulaPtr& sigma2,
                         const TheorySpec& theory,
                         const TheoryRegistry& reg = TheoryRegistry::builtin());

}  // namespace fgh

#endif
