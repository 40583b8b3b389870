#ifndef FGH_GLP_HPP
#define FGH_GLP_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fgh/formula.hpp"
#include "fgh/modal.hpp"
#include "fgh/theory.hpp"

namespace fgh {

// Hilbert proofs over the polymodal logic: propositional tautologies, the K
// and Loeb schemas at every level, the cross-level monotonicity and negative
// introspection schemas, modus ponens and necessitation.
struct ModalProofLine {
  enum class Kind { Taut, AxK, AxLob, AxMono, AxNegIntro, MP, Nec };
  Kind kind;
  MPtr formula;
  int ref1 = -1, ref2 = -1;
  int level = -1;  // Nec

  static ModalProofLine taut(MPtr f);
  static ModalProofLine ax_k(MPtr f);
  static ModalProofLine ax_lob(MPtr f);
  static ModalProofLine ax_mono(MPtr f);
  static ModalProofLine ax_negintro(MPtr f);
  static ModalProofLine mp(MPtr f, int premise, int implication);
  static ModalProofLine nec(MPtr f, int src, int level);
};

struct ModalProof {
  std::vector<ModalProofLine> lines;
  MPtr conclusion() const { return lines.empty() ? nullptr : lines.back().formula; }
};

struct ModalCheckReport {
  bool ok = false;
  std::vector<std::string> diagnostics;
  explicit operator bool() const { return ok; }
};

ModalCheckReport glp_check_proof(const ModalProof& p);

std::string modal_proof_to_jsonl(const ModalProof& p);
ModalProof modal_proof_from_jsonl(const std::string& text);

// Finite transitive irreflexive Kripke model.
struct KripkeModel {
  int worlds = 0;
  std::vector<std::pair<int, int>> edges;
  std::map<std::string, std::set<int>> valuation;
};

bool model_is_transitive_irreflexive(const KripkeModel& m);
bool model_check(const KripkeModel& m, int world, const MPtr& f);

struct GLDecision {
  bool valid = false;
  std::optional<KripkeModel> countermodel;  // refutes the input at world 0
};

// Decision procedure for the single-level fragment: tableau with the
// last-failure successor rule (each successor also asserts the failed box),
// which bounds the tree depth by the number of box subformulas. Rejects
// input that mixes modality levels.
GLDecision gl_decide(const MPtr& f);

// All strict posets (transitive irreflexive digraphs) on <= max_worlds
// vertices, up to isomorphism, as edge lists. Used by the exhaustive
// cross-check of gl_decide.
std::vector<KripkeModel> enumerate_strict_poset_frames(int max_worlds);

// Arithmetical realization: atoms by the assignment (closed sentences
// required), falsum as 0 = 1, connectives pointwise, and [n]A as the graded
// provability predicate applied to the code of the realization of A.
FormulaPtr realize(const MPtr& f, const TheorySpec& theory,
                   const std::map<std::string, FormulaPtr>& assignment);

}  // namespace fgh

#endif
