#include "fgh/formula.hpp"

#include <stdexcept>

#include "fgh/coding.hpp"

namespace fgh {

namespace {
FormulaPtr mk(Formula::Kind k, std::vector<TermPtr> ts, std::vector<FormulaPtr> ss,
              std::string v = "", std::string th = "", int lv = -1) {
  return std::make_shared<Formula>(k, std::move(ts), std::move(ss), std::move(v),
                                   std::move(th), lv);
}
}  // namespace

namespace fm {

FormulaPtr less(TermPtr l, TermPtr r) {
  return mk(Formula::Kind::Less, {std::move(l), std::move(r)}, {});
}
FormulaPtr eq(TermPtr l, TermPtr r) {
  return mk(Formula::Kind::Eq, {std::move(l), std::move(r)}, {});
}

FormulaPtr true_n(int level, TermPtr t) {
  if (level < 1) throw std::invalid_argument("TrueN level must be >= 1");
  return mk(Formula::Kind::TrueN, {std::move(t)}, {}, "", "", level);
}

FormulaPtr proof_p(const std::string& theory, TermPtr p, TermPtr f) {
  if (theory.empty()) throw std::invalid_argument("Proof atom needs a theory name");
  return mk(Formula::Kind::ProofP, {std::move(p), std::move(f)}, {}, "", theory);
}

FormulaPtr oracle_proof_p(const std::string& theory, int level, TermPtr p, TermPtr f) {
  if (theory.empty()) throw std::invalid_argument("OProof atom needs a theory name");
  if (level < 0) throw std::invalid_argument("OProof level must be >= 0");
  return mk(Formula::Kind::OracleProofP, {std::move(p), std::move(f)}, {}, "", theory, level);
}

FormulaPtr lnot(FormulaPtr a) { return mk(Formula::Kind::Not, {}, {std::move(a)}); }
FormulaPtr land(FormulaPtr a, FormulaPtr b) {
  return mk(Formula::Kind::And, {}, {std::move(a), std::move(b)});
}
FormulaPtr lor(FormulaPtr a, FormulaPtr b) {
  return mk(Formula::Kind::Or, {}, {std::move(a), std::move(b)});
}
FormulaPtr implies(FormulaPtr a, FormulaPtr b) {
  return mk(Formula::Kind::Implies, {}, {std::move(a), std::move(b)});
}

FormulaPtr forall(const std::string& v, FormulaPtr body) {
  if (v.empty()) throw std::invalid_argument("quantified variable must be nonempty");
  return mk(Formula::Kind::Forall, {}, {std::move(body)}, v);
}
FormulaPtr exists(const std::string& v, FormulaPtr body) {
  if (v.empty()) throw std::invalid_argument("quantified variable must be nonempty");
  return mk(Formula::Kind::Exists, {}, {std::move(body)}, v);
}

FormulaPtr bforall(const std::string& v, TermPtr bound, FormulaPtr body) {
  if (v.empty()) throw std::invalid_argument("quantified variable must be nonempty");
  if (term_contains_var(bound, v))
    throw std::invalid_argument("bound term of a bounded quantifier contains " + v);
  return mk(Formula::Kind::BForall, {std::move(bound)}, {std::move(body)}, v);
}
FormulaPtr bexists(const std::string& v, TermPtr bound, FormulaPtr body) {
  if (v.empty()) throw std::invalid_argument("quantified variable must be nonempty");
  if (term_contains_var(bound, v))
    throw std::invalid_argument("bound term of a bounded quantifier contains " + v);
  return mk(Formula::Kind::BExists, {std::move(bound)}, {std::move(body)}, v);
}

}  // namespace fm

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->var != b->var || a->theory != b->theory ||
      a->level != b->level)
    return false;
  if (a->terms.size() != b->terms.size() || a->subs.size() != b->subs.size()) return false;
  for (size_t i = 0; i < a->terms.size(); ++i)
    if (!term_equal(a->terms[i], b->terms[i])) return false;
  for (size_t i = 0; i < a->subs.size(); ++i)
    if (!formula_equal(a->subs[i], b->subs[i])) return false;
  return true;
}

namespace {

void free_vars_rec(const FormulaPtr& f, std::set<std::string>& bound,
                   std::set<std::string>& out) {
  for (const auto& t : f->terms) {
    std::set<std::string> tv;
    collect_term_vars(t, tv);
    for (const auto& v : tv)
      if (!bound.count(v)) out.insert(v);
  }
  const bool binds = f->kind == Formula::Kind::Forall || f->kind == Formula::Kind::Exists ||
                     f->kind == Formula::Kind::BForall || f->kind == Formula::Kind::BExists;
  if (binds) {
    bool was_bound = bound.count(f->var) > 0;
    bound.insert(f->var);
    free_vars_rec(f->subs[0], bound, out);
    if (!was_bound) bound.erase(f->var);
  } else {
    for (const auto& s : f->subs) free_vars_rec(s, bound, out);
  }
}

void all_vars_rec(const FormulaPtr& f, std::set<std::string>& out) {
  for (const auto& t : f->terms) collect_term_vars(t, out);
  if (!f->var.empty()) out.insert(f->var);
  for (const auto& s : f->subs) all_vars_rec(s, out);
}

}  // namespace

std::set<std::string> free_vars(const FormulaPtr& f) {
  std::set<std::string> bound, out;
  free_vars_rec(f, bound, out);
  return out;
}

bool is_sentence(const FormulaPtr& f) { return free_vars(f).empty(); }

FormulaPtr substitute(const FormulaPtr& f, const std::string& v, const TermPtr& r) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::TrueN:
    case Formula::Kind::ProofP:
    case Formula::Kind::OracleProofP: {
      std::vector<TermPtr> ts;
      ts.reserve(f->terms.size());
      bool changed = false;
      for (const auto& t : f->terms) {
        TermPtr nt = term_substitute(t, v, r);
        changed = changed || nt.get() != t.get();
        ts.push_back(std::move(nt));
      }
      if (!changed) return f;
      return std::make_shared<Formula>(f->kind, std::move(ts), f->subs, f->var,
                                       f->theory, f->level);
    }
    case Formula::Kind::Not:
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      std::vector<FormulaPtr> ss;
      ss.reserve(f->subs.size());
      bool changed = false;
      for (const auto& s : f->subs) {
        FormulaPtr ns = substitute(s, v, r);
        changed = changed || ns.get() != s.get();
        ss.push_back(std::move(ns));
      }
      if (!changed) return f;
      return std::make_shared<Formula>(f->kind, f->terms, std::move(ss), f->var,
                                       f->theory, f->level);
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
    case Formula::Kind::BForall:
    case Formula::Kind::BExists: {
      std::vector<TermPtr> ts = f->terms;
      bool changed = false;
      for (auto& t : ts) {
        TermPtr nt = term_substitute(t, v, r);  // bound term is outside the scope of f->var
        changed = changed || nt.get() != t.get();
        t = std::move(nt);
      }
      if (f->var == v) {
        if (!changed) return f;
        return std::make_shared<Formula>(f->kind, std::move(ts), f->subs, f->var,
                                         f->theory, f->level);
      }
      if (term_contains_var(r, f->var)) {
        // Only reachable when substituting an open term under a binder for its
        // own variable; callers use fresh or closed terms.
        if (free_vars(f).count(v))
          throw ShapeError("substitution would capture variable " + f->var);
        return f;
      }
      FormulaPtr nb = substitute(f->subs[0], v, r);
      if (!changed && nb.get() == f->subs[0].get()) return f;
      return std::make_shared<Formula>(f->kind, std::move(ts), std::vector<FormulaPtr>{nb},
                                       f->var, f->theory, f->level);
    }
  }
  throw std::logic_error("unreachable formula kind");
}

FormulaPtr substitute_numeral(const FormulaPtr& f, const std::string& v, const Nat& n) {
  return substitute(f, v, numeral(n));
}

std::string fresh_var(const std::vector<FormulaPtr>& avoid, const std::string& stem) {
  std::set<std::string> used;
  for (const auto& f : avoid) all_vars_rec(f, used);
  if (!used.count(stem)) return stem;
  for (int i = 0;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!used.count(cand)) return cand;
  }
}

}  // namespace fgh
