#include "fgh/proof.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "fgh/hierarchy.hpp"
#include "fgh/printer.hpp"

namespace fgh {

using Kind = Formula::Kind;

ProofLine ProofLine::axiom(FormulaPtr f) { return {ProofLine::Kind::Axiom, std::move(f)}; }
ProofLine ProofLine::taut(FormulaPtr f) { return {ProofLine::Kind::Taut, std::move(f)}; }
ProofLine ProofLine::oracle(FormulaPtr f, int level) {
  ProofLine l{ProofLine::Kind::OracleTrue, std::move(f)};
  l.level = level;
  return l;
}
ProofLine ProofLine::mp(FormulaPtr f, int premise, int implication) {
  ProofLine l{ProofLine::Kind::MP, std::move(f)};
  l.ref1 = premise;
  l.ref2 = implication;
  return l;
}
ProofLine ProofLine::gen(FormulaPtr f, int src, const std::string& v) {
  ProofLine l{ProofLine::Kind::Gen, std::move(f)};
  l.ref1 = src;
  l.gen_var = v;
  return l;
}

FormulaPtr Proof::conclusion() const {
  return lines.empty() ? nullptr : lines.back().formula;
}

namespace {

// ---- instance matching for the quantifier schemas ----

// Walks pattern and candidate in parallel; free occurrences of x in the
// pattern may map to one common term. Returns false on structural mismatch.
bool gather(const TermPtr& pat, const TermPtr& cand, const std::string& x, bool active,
            std::vector<TermPtr>& witnesses) {
  if (active && pat->kind == Term::Kind::Var && pat->name == x) {
    witnesses.push_back(cand);
    return true;
  }
  if (pat->kind != cand->kind || pat->name != cand->name) return false;
  if (pat->args.size() != cand->args.size()) return false;
  for (size_t i = 0; i < pat->args.size(); ++i)
    if (!gather(pat->args[i], cand->args[i], x, active, witnesses)) return false;
  return true;
}

bool gather(const FormulaPtr& pat, const FormulaPtr& cand, const std::string& x,
            bool active, std::vector<TermPtr>& witnesses) {
  if (pat->kind != cand->kind || pat->var != cand->var || pat->theory != cand->theory ||
      pat->level != cand->level)
    return false;
  if (pat->terms.size() != cand->terms.size() || pat->subs.size() != cand->subs.size())
    return false;
  bool inner_active = active && pat->var != x;  // binder on x shadows
  for (size_t i = 0; i < pat->terms.size(); ++i)
    if (!gather(pat->terms[i], cand->terms[i], x, active, witnesses)) return false;
  for (size_t i = 0; i < pat->subs.size(); ++i)
    if (!gather(pat->subs[i], cand->subs[i], x, pat->var.empty() ? active : inner_active,
                witnesses))
      return false;
  return true;
}

// True iff cand == pat[x := t] for some term t (substitutable without
// capture).
bool matches_instance(const FormulaPtr& pat, const std::string& x, const FormulaPtr& cand) {
  std::vector<TermPtr> wits;
  if (!gather(pat, cand, x, true, wits)) return false;
  if (wits.empty()) return formula_equal(pat, cand);
  for (size_t i = 1; i < wits.size(); ++i)
    if (!term_equal(wits[0], wits[i])) return false;
  try {
    return formula_equal(substitute(pat, x, wits[0]), cand);
  } catch (const ShapeError&) {
    return false;  // capture
  }
}

// True iff b equals a with some occurrences of closed term s replaced by the
// closed term t.
bool replace_compat_term(const TermPtr& a, const TermPtr& b, const TermPtr& s,
                         const TermPtr& t) {
  if (term_equal(a, b)) return true;
  if (term_equal(a, s) && term_equal(b, t)) return true;
  if (a->kind != b->kind || a->name != b->name || a->args.size() != b->args.size())
    return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!replace_compat_term(a->args[i], b->args[i], s, t)) return false;
  return true;
}

bool replace_compat(const FormulaPtr& a, const FormulaPtr& b, const TermPtr& s,
                    const TermPtr& t) {
  if (a->kind != b->kind || a->var != b->var || a->theory != b->theory ||
      a->level != b->level)
    return false;
  if (a->terms.size() != b->terms.size() || a->subs.size() != b->subs.size()) return false;
  for (size_t i = 0; i < a->terms.size(); ++i)
    if (!replace_compat_term(a->terms[i], b->terms[i], s, t)) return false;
  for (size_t i = 0; i < a->subs.size(); ++i)
    if (!replace_compat(a->subs[i], b->subs[i], s, t)) return false;
  return true;
}

bool term_closed(const TermPtr& t) { return !term_has_any_var(t); }

}  // namespace

bool is_logical_axiom(const FormulaPtr& f) {
  // t = t
  if (f->kind == Kind::Eq && term_equal(f->terms[0], f->terms[1])) return true;
  if (f->kind != Kind::Implies) return false;
  const FormulaPtr& l = f->subs[0];
  const FormulaPtr& r = f->subs[1];

  // (A x. phi) -> phi[t/x]
  if (l->kind == Kind::Forall && matches_instance(l->subs[0], l->var, r)) return true;
  // phi[t/x] -> (E x. phi)
  if (r->kind == Kind::Exists && matches_instance(r->subs[0], r->var, l)) return true;

  if (l->kind == Kind::Forall && l->subs[0]->kind == Kind::Implies) {
    const std::string& x = l->var;
    const FormulaPtr& p = l->subs[0]->subs[0];
    const FormulaPtr& q = l->subs[0]->subs[1];
    if (r->kind == Kind::Implies) {
      // (A x. p -> q) -> ((A x. p) -> (A x. q))
      if (r->subs[0]->kind == Kind::Forall && r->subs[0]->var == x &&
          r->subs[1]->kind == Kind::Forall && r->subs[1]->var == x &&
          formula_equal(r->subs[0]->subs[0], p) && formula_equal(r->subs[1]->subs[0], q))
        return true;
      // (A x. p -> q) -> (p -> (A x. q)) when x not free in p
      if (r->subs[1]->kind == Kind::Forall && r->subs[1]->var == x &&
          formula_equal(r->subs[0], p) && formula_equal(r->subs[1]->subs[0], q) &&
          !free_vars(p).count(x))
        return true;
      // (A x. p -> q) -> ((E x. p) -> q) when x not free in q
      if (r->subs[0]->kind == Kind::Exists && r->subs[0]->var == x &&
          formula_equal(r->subs[0]->subs[0], p) && formula_equal(r->subs[1], q) &&
          !free_vars(q).count(x))
        return true;
    }
  }
  // phi -> (A x. phi) when x not free in phi
  if (r->kind == Kind::Forall && formula_equal(r->subs[0], l) &&
      !free_vars(l).count(r->var))
    return true;
  // (E x. phi) -> phi when x not free in phi
  if (l->kind == Kind::Exists && formula_equal(l->subs[0], r) &&
      !free_vars(r).count(l->var))
    return true;

  // s = t -> t = s
  if (l->kind == Kind::Eq && r->kind == Kind::Eq &&
      term_equal(l->terms[0], r->terms[1]) && term_equal(l->terms[1], r->terms[0]))
    return true;
  // (s = t & t = u) -> s = u
  if (l->kind == Kind::And && l->subs[0]->kind == Kind::Eq &&
      l->subs[1]->kind == Kind::Eq && r->kind == Kind::Eq &&
      term_equal(l->subs[0]->terms[0], r->terms[0]) &&
      term_equal(l->subs[0]->terms[1], l->subs[1]->terms[0]) &&
      term_equal(l->subs[1]->terms[1], r->terms[1]))
    return true;
  // s = t -> (A -> A'), A' = A with occurrences of s replaced by t; closed s, t
  if (l->kind == Kind::Eq && r->kind == Kind::Implies && term_closed(l->terms[0]) &&
      term_closed(l->terms[1]) &&
      replace_compat(r->subs[0], r->subs[1], l->terms[0], l->terms[1]))
    return true;

  // bounded-quantifier unfolding, both directions
  auto unfold_forall = [](const FormulaPtr& bq) {
    return fm::forall(bq->var,
                      fm::implies(fm::less(tm::var(bq->var), bq->terms[0]), bq->subs[0]));
  };
  auto unfold_exists = [](const FormulaPtr& bq) {
    return fm::exists(bq->var,
                      fm::land(fm::less(tm::var(bq->var), bq->terms[0]), bq->subs[0]));
  };
  if (l->kind == Kind::BForall && formula_equal(r, unfold_forall(l))) return true;
  if (r->kind == Kind::BForall && formula_equal(l, unfold_forall(r))) return true;
  if (l->kind == Kind::BExists && formula_equal(r, unfold_exists(l))) return true;
  if (r->kind == Kind::BExists && formula_equal(l, unfold_exists(r))) return true;

  return false;
}

namespace {

// Boolean skeleton with non-boolean subformulas as numbered atoms. Atom
// identity is structural; formulas sharing subtrees hit the pointer fast
// path in formula_equal.
struct Skel {
  int op;  // 0 atom, 1 not, 2 and, 3 or, 4 implies
  int atom = -1;
  std::unique_ptr<Skel> l, r;
};

std::unique_ptr<Skel> build_skel(const FormulaPtr& f, std::vector<FormulaPtr>& atoms) {
  auto s = std::make_unique<Skel>();
  switch (f->kind) {
    case Kind::Not:
      s->op = 1;
      s->l = build_skel(f->subs[0], atoms);
      return s;
    case Kind::And:
    case Kind::Or:
    case Kind::Implies:
      s->op = f->kind == Kind::And ? 2 : f->kind == Kind::Or ? 3 : 4;
      s->l = build_skel(f->subs[0], atoms);
      s->r = build_skel(f->subs[1], atoms);
      return s;
    default:
      s->op = 0;
      for (size_t i = 0; i < atoms.size(); ++i)
        if (formula_equal(atoms[i], f)) {
          s->atom = static_cast<int>(i);
          return s;
        }
      atoms.push_back(f);
      s->atom = static_cast<int>(atoms.size()) - 1;
      return s;
  }
}

bool skel_eval(const Skel& s, uint32_t assignment) {
  switch (s.op) {
    case 0: return (assignment >> s.atom) & 1;
    case 1: return !skel_eval(*s.l, assignment);
    case 2: return skel_eval(*s.l, assignment) && skel_eval(*s.r, assignment);
    case 3: return skel_eval(*s.l, assignment) || skel_eval(*s.r, assignment);
    default: return !skel_eval(*s.l, assignment) || skel_eval(*s.r, assignment);
  }
}

}  // namespace

bool is_tautology(const FormulaPtr& f) {
  std::vector<FormulaPtr> atoms;
  std::unique_ptr<Skel> s = build_skel(f, atoms);
  if (atoms.size() > 20) return false;
  uint32_t n = static_cast<uint32_t>(atoms.size());
  for (uint32_t a = 0; a < (1u << n); ++a)
    if (!skel_eval(*s, a)) return false;
  return true;
}

namespace {

struct LineCheck {
  bool structural_ok = true;
  bool oracle_seen = false;
  Truth oracle_status = Truth::True;
};

void check_line(const TheorySpec& theory, const Proof& p, size_t i, int oracle_level,
                uint64_t fuel, const TheoryRegistry& reg, LineCheck& st,
                std::vector<std::string>& diags) {
  const ProofLine& ln = p.lines[i];
  auto bad = [&](const std::string& why) {
    st.structural_ok = false;
    diags.push_back("line " + std::to_string(i) + ": " + why);
  };
  if (!ln.formula) {
    bad("missing formula");
    return;
  }
  switch (ln.kind) {
    case ProofLine::Kind::Axiom:
      if (!theory.recognizes(ln.formula) && !is_logical_axiom(ln.formula))
        bad("not an axiom of " + theory.name + " nor a logical axiom");
      return;
    case ProofLine::Kind::Taut:
      if (!is_tautology(ln.formula)) bad("not a propositional tautology");
      return;
    case ProofLine::Kind::OracleTrue: {
      if (oracle_level < 0) {
        bad("oracle line not permitted in plain provability");
        return;
      }
      if (ln.level < 0 || ln.level > oracle_level) {
        bad("oracle level " + std::to_string(ln.level) + " exceeds " +
            std::to_string(oracle_level));
        return;
      }
      if (!is_sentence(ln.formula)) {
        bad("oracle sentence has free variables");
        return;
      }
      if (!is_in_class(ln.formula, FormulaClass::sigma1(ln.level + 1))) {
        bad("oracle sentence not within Sigma1Class(" + std::to_string(ln.level + 1) + ")");
        return;
      }
      st.oracle_seen = true;
      Verdict v = true_sigma(ln.formula, ln.level, fuel, reg);
      if (v.value == Truth::False) bad("oracle sentence certified false");
      else if (v.value == Truth::Unknown && st.oracle_status == Truth::True)
        st.oracle_status = Truth::Unknown;
      return;
    }
    case ProofLine::Kind::MP: {
      if (ln.ref1 < 0 || ln.ref2 < 0 || static_cast<size_t>(ln.ref1) >= i ||
          static_cast<size_t>(ln.ref2) >= i) {
        bad("MP references out of range");
        return;
      }
      const FormulaPtr& prem = p.lines[ln.ref1].formula;
      const FormulaPtr& impl = p.lines[ln.ref2].formula;
      if (!impl || impl->kind != Kind::Implies || !formula_equal(impl->subs[0], prem) ||
          !formula_equal(impl->subs[1], ln.formula))
        bad("MP does not match its premises");
      return;
    }
    case ProofLine::Kind::Gen: {
      if (ln.ref1 < 0 || static_cast<size_t>(ln.ref1) >= i) {
        bad("Gen reference out of range");
        return;
      }
      if (ln.formula->kind != Kind::Forall || ln.formula->var != ln.gen_var ||
          !formula_equal(ln.formula->subs[0], p.lines[ln.ref1].formula))
        bad("Gen does not generalize its source line");
      return;
    }
  }
}

}  // namespace

CheckReport check_proof(const TheorySpec& theory, const Proof& p,
                        const TheoryRegistry& reg) {
  CheckReport rep;
  if (p.lines.empty()) {
    rep.diagnostics.push_back("empty proof");
    return rep;
  }
  LineCheck st;
  for (size_t i = 0; i < p.lines.size(); ++i)
    check_line(theory, p, i, -1, 0, reg, st, rep.diagnostics);
  rep.ok = st.structural_ok;
  return rep;
}

OracleCheckReport check_oracle_proof(const TheorySpec& theory, int n, const Proof& p,
                                     uint64_t fuel, const TheoryRegistry& reg) {
  OracleCheckReport rep;
  if (n < 0) {
    rep.status = Truth::False;
    rep.diagnostics.push_back("oracle level must be >= 0");
    return rep;
  }
  if (p.lines.empty()) {
    rep.status = Truth::False;
    rep.diagnostics.push_back("empty proof");
    return rep;
  }
  LineCheck st;
  for (size_t i = 0; i < p.lines.size(); ++i)
    check_line(theory, p, i, n, fuel, reg, st, rep.diagnostics);
  if (!st.structural_ok) rep.status = Truth::False;
  else rep.status = st.oracle_status;
  return rep;
}

namespace {

FormulaPtr top_sentence() { return fm::eq(tm::zero(), tm::zero()); }

FormulaPtr conj_right(const std::vector<FormulaPtr>& fs) {
  if (fs.empty()) return top_sentence();
  FormulaPtr acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = fm::land(fs[i], acc);
  return acc;
}

struct Builder {
  Proof p;
  int add(ProofLine ln) {
    p.lines.push_back(std::move(ln));
    return static_cast<int>(p.lines.size()) - 1;
  }
  // Appends q's lines, shifting internal references.
  int splice(const Proof& q) {
    int off = static_cast<int>(p.lines.size());
    for (const auto& ln : q.lines) {
      ProofLine c = ln;
      if (c.ref1 >= 0) c.ref1 += off;
      if (c.ref2 >= 0) c.ref2 += off;
      p.lines.push_back(std::move(c));
    }
    return static_cast<int>(p.lines.size()) - 1;
  }
};

}  // namespace

Deduction deduction_extract(const TheorySpec& theory, int n, const Proof& p, uint64_t fuel,
                            const TheoryRegistry& reg) {
  OracleCheckReport pre = check_oracle_proof(theory, n, p, fuel, reg);
  if (pre.status != Truth::True)
    throw ShapeError("deduction_extract requires an oracle proof certified True");

  std::vector<FormulaPtr> oracle_sentences;
  for (const auto& ln : p.lines)
    if (ln.kind == ProofLine::Kind::OracleTrue) oracle_sentences.push_back(ln.formula);
  FormulaPtr hyp = conj_right(oracle_sentences);

  // Rebuild each line phi_i as hyp -> phi_i.
  Builder b;
  std::vector<int> at(p.lines.size(), -1);  // index of hyp -> phi_i
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& ln = p.lines[i];
    FormulaPtr lifted = fm::implies(hyp, ln.formula);
    switch (ln.kind) {
      case ProofLine::Kind::Axiom:
      case ProofLine::Kind::Taut: {
        int base = b.add(ln);
        int k = b.add(ProofLine::taut(fm::implies(ln.formula, lifted)));
        at[i] = b.add(ProofLine::mp(lifted, base, k));
        break;
      }
      case ProofLine::Kind::OracleTrue: {
        // hyp is a conjunction containing the sentence, so the lift is a
        // projection tautology.
        at[i] = b.add(ProofLine::taut(lifted));
        break;
      }
      case ProofLine::Kind::MP: {
        FormulaPtr a = p.lines[ln.ref1].formula;
        FormulaPtr ab = p.lines[ln.ref2].formula;
        FormulaPtr lift_a = fm::implies(hyp, a);
        FormulaPtr lift_ab = fm::implies(hyp, ab);
        int k1 = b.add(ProofLine::taut(
            fm::implies(lift_a, fm::implies(lift_ab, lifted))));
        int k2 = b.add(ProofLine::mp(fm::implies(lift_ab, lifted), at[ln.ref1], k1));
        at[i] = b.add(ProofLine::mp(lifted, at[ln.ref2], k2));
        break;
      }
      case ProofLine::Kind::Gen: {
        // hyp -> phi, generalize, then distribute; hyp is closed.
        FormulaPtr inner = p.lines[ln.ref1].formula;
        FormulaPtr gen_impl = fm::forall(ln.gen_var, fm::implies(hyp, inner));
        int g = b.add(ProofLine::gen(gen_impl, at[ln.ref1], ln.gen_var));
        int ax = b.add(ProofLine::axiom(fm::implies(gen_impl, lifted)));
        at[i] = b.add(ProofLine::mp(lifted, g, ax));
        break;
      }
    }
  }

  Deduction d;
  std::vector<Nat> codes;
  codes.reserve(oracle_sentences.size());
  for (const auto& s : oracle_sentences) codes.push_back(encode(s));
  d.oracle_codes = seq_encode(codes);
  d.implication_proof = std::move(b.p);
  d.hypothesis = hyp;
  d.conclusion = p.conclusion();
  return d;
}

Proof deduction_reassemble(const TheorySpec& theory, int n, const SeqCode& oracle_codes,
                           const Proof& implication_proof, const TheoryRegistry& reg) {
  (void)theory;
  (void)reg;
  std::vector<FormulaPtr> sentences;
  for (const auto& c : seq_decode(oracle_codes)) sentences.push_back(decode_formula(c));
  FormulaPtr concl = implication_proof.conclusion();
  if (!concl || concl->kind != Kind::Implies)
    throw ShapeError("reassemble: implication proof must conclude hyp -> phi");
  FormulaPtr hyp = concl->subs[0];
  if (!formula_equal(hyp, conj_right(sentences)))
    throw ShapeError("reassemble: hypothesis does not match the oracle sequence");

  Builder b;
  if (sentences.empty()) {
    int h = b.add(ProofLine::axiom(hyp));  // 0 = 0
    int last = b.splice(implication_proof);
    b.add(ProofLine::mp(concl->subs[1], h, last));
    return std::move(b.p);
  }
  std::vector<int> at;
  at.reserve(sentences.size());
  for (const auto& s : sentences) {
    int lv = n;  // accepted at the ambient level by Sigma-class inclusion
    at.push_back(b.add(ProofLine::oracle(s, lv)));
  }
  // Fold the conjunction right-to-left: s_{k-1}, then s_i & acc.
  int acc = at.back();
  FormulaPtr acc_f = sentences.back();
  for (size_t i = sentences.size() - 1; i-- > 0;) {
    FormulaPtr combined = fm::land(sentences[i], acc_f);
    int t = b.add(ProofLine::taut(
        fm::implies(sentences[i], fm::implies(acc_f, combined))));
    int m1 = b.add(ProofLine::mp(fm::implies(acc_f, combined), at[i], t));
    acc = b.add(ProofLine::mp(combined, acc, m1));
    acc_f = combined;
  }
  int last = b.splice(implication_proof);
  b.add(ProofLine::mp(concl->subs[1], acc, last));
  return std::move(b.p);
}

namespace {

const char* kind_name(ProofLine::Kind k) {
  switch (k) {
    case ProofLine::Kind::Axiom: return "axiom";
    case ProofLine::Kind::Taut: return "taut";
    case ProofLine::Kind::OracleTrue: return "oracle";
    case ProofLine::Kind::MP: return "mp";
    case ProofLine::Kind::Gen: return "gen";
  }
  return "?";
}

}  // namespace

std::string proof_to_jsonl(const Proof& p) {
  std::ostringstream os;
  for (const auto& ln : p.lines) {
    nlohmann::json j;
    j["kind"] = kind_name(ln.kind);
    j["formula"] = render(ln.formula);
    std::vector<int> refs;
    if (ln.ref1 >= 0) refs.push_back(ln.ref1);
    if (ln.ref2 >= 0) refs.push_back(ln.ref2);
    j["refs"] = refs;
    if (ln.level >= 0) j["level"] = ln.level;
    if (!ln.gen_var.empty()) j["var"] = ln.gen_var;
    os << j.dump() << "\n";
  }
  return os.str();
}

Proof proof_from_jsonl(const std::string& text) {
  Proof p;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("proof line " + std::to_string(lineno) + ": " + e.what(), 0);
    }
    std::string kind = j.at("kind").get<std::string>();
    FormulaPtr f = parse_formula(j.at("formula").get<std::string>()).ast;
    std::vector<int> refs;
    if (j.contains("refs")) refs = j["refs"].get<std::vector<int>>();
    if (kind == "axiom") p.lines.push_back(ProofLine::axiom(f));
    else if (kind == "taut") p.lines.push_back(ProofLine::taut(f));
    else if (kind == "oracle")
      p.lines.push_back(ProofLine::oracle(f, j.at("level").get<int>()));
    else if (kind == "mp") {
      if (refs.size() != 2)
        throw ParseError("proof line " + std::to_string(lineno) + ": mp needs two refs", 0);
      p.lines.push_back(ProofLine::mp(f, refs[0], refs[1]));
    } else if (kind == "gen") {
      if (refs.size() != 1)
        throw ParseError("proof line " + std::to_string(lineno) + ": gen needs one ref", 0);
      p.lines.push_back(ProofLine::gen(f, refs[0], j.at("var").get<std::string>()));
    } else {
      throw ParseError("proof line " + std::to_string(lineno) + ": unknown kind " + kind, 0);
    }
  }
  return p;
}

}  // namespace fgh
