#ifndef FGH_PROOF_HPP
#define FGH_PROOF_HPP

#include <optional>
#include <string>
#include <vector>

#include "fgh/coding.hpp"
#include "fgh/semantics.hpp"
#include "fgh/theory.hpp"

namespace fgh {

// Hilbert-style proof objects. A line is justified by being a recognized
// axiom (theory axiom or logical axiom of the fixed base calculus), a
// propositional tautology, a true oracle sentence at some level, or an
// application of modus ponens / generalization to earlier lines.
struct ProofLine {
  enum class Kind { Axiom, Taut, OracleTrue, MP, Gen };
  Kind kind;
  FormulaPtr formula;
  int ref1 = -1;          // MP: premise line; Gen: source line
  int ref2 = -1;          // MP: implication line
  int level = -1;         // OracleTrue: oracle level m
  std::string gen_var;    // Gen

  static ProofLine axiom(FormulaPtr f);
  static ProofLine taut(FormulaPtr f);
  static ProofLine oracle(FormulaPtr f, int level);
  static ProofLine mp(FormulaPtr f, int premise, int implication);
  static ProofLine gen(FormulaPtr f, int src, const std::string& v);
};

struct Proof {
  std::vector<ProofLine> lines;
  FormulaPtr conclusion() const;
};

struct CheckReport {
  bool ok = false;
  std::vector<std::string> diagnostics;  // one entry per offending line
  explicit operator bool() const { return ok; }
};

struct OracleCheckReport {
  Truth status = Truth::False;  // True / False / Unknown
  std::vector<std::string> diagnostics;
};

// Plain provability: oracle lines are never permitted.
CheckReport check_proof(const TheorySpec& theory, const Proof& p,
                        const TheoryRegistry& reg = TheoryRegistry::builtin());

// Oracle provability at level n: OracleTrue(f, m) lines with m <= n are
// accepted when f is a closed level-(m+1) formula certified true at the given
// fuel; an uncertified oracle line makes the whole answer Unknown.
OracleCheckReport check_oracle_proof(const TheorySpec& theory, int n, const Proof& p,
                                     uint64_t fuel,
                                     const TheoryRegistry& reg = TheoryRegistry::builtin());

// The deduction-theorem transformation between oracle proofs and oracle-free
// proofs of (conjunction of oracle sentences) -> conclusion.
struct Deduction {
  SeqCode oracle_codes;     // sequence of the oracle sentences' codes, in order
  Proof implication_proof;  // oracle-free, concludes hypothesis -> conclusion
  FormulaPtr hypothesis;    // right-associated conjunction; (0 = 0) when empty
  FormulaPtr conclusion;
};

Deduction deduction_extract(const TheorySpec& theory, int n, const Proof& p, uint64_t fuel,
                            const TheoryRegistry& reg = TheoryRegistry::builtin());
Proof deduction_reassemble(const TheorySpec& theory, int n, const SeqCode& oracle_codes,
                           const Proof& implication_proof,
                           const TheoryRegistry& reg = TheoryRegistry::builtin());

// Whether f is an axiom of the fixed base calculus for first-order logic with
// identity (quantifier schemas, equality schemas, bounded-quantifier
// unfolding). Exposed for tests.
bool is_logical_axiom(const FormulaPtr& f);

// Propositional tautology test on the boolean skeleton (non-boolean
// subformulas as atoms). Returns false when the skeleton has too many
// distinct atoms to decide (> 20).
bool is_tautology(const FormulaPtr& f);

// JSON-lines serialization, one object per line:
//   {"kind": "axiom"|"taut"|"oracle"|"mp"|"gen", "formula": "...",
//    "refs": [..], "level": n, "var": "x"}
std::string proof_to_jsonl(const Proof& p);
Proof proof_from_jsonl(const std::string& text);  // throws ParseError / DecodeError

}  // namespace fgh

#endif
