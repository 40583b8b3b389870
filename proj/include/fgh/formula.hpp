#ifndef FGH_FORMULA_HPP
#define FGH_FORMULA_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fgh/term.hpp"

namespace fgh {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// First-order formulas over the arithmetic language, with bounded quantifiers
// as primitive nodes and three semantic predicate symbols:
//   TrueN[k](t)            partial truth predicate for level-k sentences, k >= 1
//   Proof[T](p, f)         p codes a T-proof of the formula coded by f
//   OProof[T;n](p, f)      p codes a T-proof from true level-(n+1) oracle sentences
// Immutable after construction; shared freely.
class Formula {
 public:
  enum class Kind {
    Less,
    Eq,
    TrueN,
    ProofP,
    OracleProofP,
    Not,
    And,
    Or,
    Implies,
    Forall,
    Exists,
    BForall,
    BExists,
  };

  Kind kind;
  std::vector<TermPtr> terms;   // Less/Eq {l,r}; TrueN {t}; ProofP/OracleProofP {p,f}; BQ {bound}
  std::vector<FormulaPtr> subs; // connective / quantifier children
  std::string var;              // quantifiers
  std::string theory;           // ProofP / OracleProofP
  int level = -1;               // TrueN (>=1), OracleProofP (>=0)

  Formula(Kind k, std::vector<TermPtr> ts, std::vector<FormulaPtr> ss,
          std::string v, std::string th, int lv)
      : kind(k), terms(std::move(ts)), subs(std::move(ss)),
        var(std::move(v)), theory(std::move(th)), level(lv) {}
};

namespace fm {
FormulaPtr less(TermPtr l, TermPtr r);
FormulaPtr eq(TermPtr l, TermPtr r);
FormulaPtr true_n(int level, TermPtr t);  // level >= 1
FormulaPtr proof_p(const std::string& theory, TermPtr p, TermPtr f);
FormulaPtr oracle_proof_p(const std::string& theory, int level, TermPtr p, TermPtr f);
FormulaPtr lnot(FormulaPtr a);
FormulaPtr land(FormulaPtr a, FormulaPtr b);
FormulaPtr lor(FormulaPtr a, FormulaPtr b);
FormulaPtr implies(FormulaPtr a, FormulaPtr b);
FormulaPtr forall(const std::string& v, FormulaPtr body);
FormulaPtr exists(const std::string& v, FormulaPtr body);
// Bounded quantifiers require the bound term to avoid the quantified variable.
FormulaPtr bforall(const std::string& v, TermPtr bound, FormulaPtr body);
FormulaPtr bexists(const std::string& v, TermPtr bound, FormulaPtr body);
}  // namespace fm

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

std::set<std::string> free_vars(const FormulaPtr& f);
bool is_sentence(const FormulaPtr& f);

// Capture-checked substitution of a term for every free occurrence of v.
// Throws ShapeError if a free variable of r would be captured.
FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& r);

// Substitution of the numeral of n for v; numerals are closed, so capture is
// impossible.
FormulaPtr substitute_numeral(const FormulaPtr& f, const std::string& v, const Nat& n);

// A variable name not occurring (free or bound) in any of the given formulas.
std::string fresh_var(const std::vector<FormulaPtr>& avoid, const std::string& stem);

}  // namespace fgh

#endif
