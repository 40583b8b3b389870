#include "fgh/search.hpp"

#include "fgh/hierarchy.hpp"
#include "fgh/semantics.hpp"

namespace fgh {

namespace {

using FKind = Formula::Kind;

struct Searcher {
  const TheorySpec& theory;
  const TheoryRegistry& reg;
  uint64_t budget;
  int oracle_level;
  uint64_t oracle_fuel;

  bool spend() {
    if (budget == 0) return false;
    --budget;
    return true;
  }

  static int splice(Proof& dst, const Proof& src) {
    int off = static_cast<int>(dst.lines.size());
    for (const auto& ln : src.lines) {
      ProofLine c = ln;
      if (c.ref1 >= 0) c.ref1 += off;
      if (c.ref2 >= 0) c.ref2 += off;
      dst.lines.push_back(std::move(c));
    }
    return static_cast<int>(dst.lines.size()) - 1;
  }

  std::optional<Proof> prove(const FormulaPtr& goal) {
    if (!spend()) return std::nullopt;

    if (theory.recognizes(goal) || is_logical_axiom(goal)) {
      Proof p;
      p.lines.push_back(ProofLine::axiom(goal));
      return p;
    }
    if (is_tautology(goal)) {
      Proof p;
      p.lines.push_back(ProofLine::taut(goal));
      return p;
    }
    if (oracle_level >= 0 && is_sentence(goal) &&
        is_in_class(goal, FormulaClass::sigma1(oracle_level + 1)) &&
        true_sigma(goal, oracle_level, oracle_fuel, reg).value == Truth::True) {
      Proof p;
      p.lines.push_back(ProofLine::oracle(goal, oracle_level));
      return p;
    }

    switch (goal->kind) {
      case FKind::And: {
        auto pa = prove(goal->subs[0]);
        if (!pa) return std::nullopt;
        auto pb = prove(goal->subs[1]);
        if (!pb) return std::nullopt;
        Proof p;
        int ia = splice(p, *pa);
        int ib = splice(p, *pb);
        const FormulaPtr& a = goal->subs[0];
        const FormulaPtr& b = goal->subs[1];
        FormulaPtr step = fm::implies(b, goal);
        int t = static_cast<int>(p.lines.size());
        p.lines.push_back(ProofLine::taut(fm::implies(a, step)));
        int m1 = static_cast<int>(p.lines.size());
        p.lines.push_back(ProofLine::mp(step, ia, t));
        p.lines.push_back(ProofLine::mp(goal, ib, m1));
        return p;
      }
      case FKind::Or: {
        for (int side = 0; side < 2; ++side) {
          auto ps = prove(goal->subs[side]);
          if (!ps) continue;
          Proof p;
          int is = splice(p, *ps);
          int t = static_cast<int>(p.lines.size());
          p.lines.push_back(ProofLine::taut(fm::implies(goal->subs[side], goal)));
          p.lines.push_back(ProofLine::mp(goal, is, t));
          return p;
        }
        return std::nullopt;
      }
      case FKind::Implies: {
        auto pb = prove(goal->subs[1]);
        if (!pb) return std::nullopt;
        Proof p;
        int ib = splice(p, *pb);
        int t = static_cast<int>(p.lines.size());
        p.lines.push_back(ProofLine::taut(fm::implies(goal->subs[1], goal)));
        p.lines.push_back(ProofLine::mp(goal, ib, t));
        return p;
      }
      case FKind::Exists:
        return prove_exists(goal);
      case FKind::BExists: {
        // Route through the unfolded existential and the unfolding axiom.
        FormulaPtr unfolded = fm::exists(
            goal->var, fm::land(fm::less(tm::var(goal->var), goal->terms[0]),
                                goal->subs[0]));
        auto pe = prove_exists(unfolded);
        if (!pe) return std::nullopt;
        Proof p;
        int ie = splice(p, *pe);
        int ax = static_cast<int>(p.lines.size());
        p.lines.push_back(ProofLine::axiom(fm::implies(unfolded, goal)));
        p.lines.push_back(ProofLine::mp(goal, ie, ax));
        return p;
      }
      case FKind::Forall: {
        auto pb = prove(goal->subs[0]);
        if (!pb) return std::nullopt;
        Proof p;
        int ib = splice(p, *pb);
        p.lines.push_back(ProofLine::gen(goal, ib, goal->var));
        return p;
      }
      default:
        return std::nullopt;
    }
  }

  // Witness candidates: a definitional equation pins the value; otherwise
  // ascending values up to 64 filtered by the evaluator.
  std::optional<Proof> prove_exists(const FormulaPtr& goal) {
    const std::string& x = goal->var;
    const FormulaPtr& body = goal->subs[0];
    std::vector<Nat> candidates;

    const FormulaPtr eq_part =
        body->kind == FKind::And ? body->subs[0] : body;
    if (eq_part->kind == FKind::Eq) {
      TermPtr t;
      if (eq_part->terms[0]->kind == Term::Kind::Var && eq_part->terms[0]->name == x &&
          !term_contains_var(eq_part->terms[1], x))
        t = eq_part->terms[1];
      else if (eq_part->terms[1]->kind == Term::Kind::Var &&
               eq_part->terms[1]->name == x && !term_contains_var(eq_part->terms[0], x))
        t = eq_part->terms[0];
      if (t && !term_has_any_var(t)) {
        try {
          candidates.push_back(eval_term(t, {}));
        } catch (const EvalError&) {
        } catch (const DecodeError&) {
        }
      }
    }
    if (candidates.empty()) {
      for (uint64_t k = 0; k <= 64; ++k) {
        if (budget == 0) break;
        FormulaPtr inst = substitute_numeral(body, x, Nat(k));
        if (!is_sentence(inst)) break;  // open goals get no value search
        try {
          if (eval_with_fuel(inst, 64, reg).value == Truth::True)
            candidates.push_back(Nat(k));
        } catch (const EvalError&) {
          break;
        } catch (const DecodeError&) {
          break;
        }
        if (!candidates.empty()) break;
      }
    }
    for (const Nat& w : candidates) {
      FormulaPtr inst = substitute_numeral(body, x, w);
      auto pi = prove(inst);
      if (!pi) continue;
      Proof p;
      int ii = splice(p, *pi);
      int ax = static_cast<int>(p.lines.size());
      p.lines.push_back(ProofLine::axiom(fm::implies(inst, goal)));
      p.lines.push_back(ProofLine::mp(goal, ii, ax));
      return p;
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<Proof> bounded_search(const TheorySpec& theory, const FormulaPtr& goal,
                                    uint64_t budget, const TheoryRegistry& reg,
                                    int oracle_level, uint64_t oracle_fuel) {
  Searcher s{theory, reg, budget, oracle_level, oracle_fuel};
  return s.prove(goal);
}

}  // namespace fgh
