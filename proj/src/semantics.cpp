#include "fgh/semantics.hpp"

#include <algorithm>
#include <optional>

#include "fgh/coding.hpp"
#include "fgh/hierarchy.hpp"
#include "fgh/printer.hpp"
#include "fgh/proof.hpp"
#include "fgh/search.hpp"

namespace fgh {

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "True";
    case Truth::False: return "False";
    case Truth::Unknown: return "Unknown";
  }
  return "?";
}

Nat eval_term(const TermPtr& t, const Env& env) {
  switch (t->kind) {
    case Term::Kind::Zero: return 0;
    case Term::Kind::One: return 1;
    case Term::Kind::Var: {
      auto it = env.find(t->name);
      if (it == env.end()) throw EvalError("unbound variable: " + t->name);
      return it->second;
    }
    case Term::Kind::Exp: return pow2(eval_term(t->args[0], env));
    case Term::Kind::Add: return eval_term(t->args[0], env) + eval_term(t->args[1], env);
    case Term::Kind::Mul: return eval_term(t->args[0], env) * eval_term(t->args[1], env);
    case Term::Kind::Sub:
      try {
        return sub_num(eval_term(t->args[0], env), eval_term(t->args[1], env),
                       eval_term(t->args[2], env));
      } catch (const DecodeError& e) {
        throw EvalError(std::string("sub: ") + e.what());
      }
    case Term::Kind::ImpCode:
      try {
        return imp_num(eval_term(t->args[0], env), eval_term(t->args[1], env));
      } catch (const DecodeError& e) {
        throw EvalError(std::string("imp: ") + e.what());
      }
    case Term::Kind::AllCode:
      try {
        return all_num(eval_term(t->args[0], env), eval_term(t->args[1], env));
      } catch (const DecodeError& e) {
        throw EvalError(std::string("all: ") + e.what());
      }
    case Term::Kind::NotCode:
      try {
        return not_num(eval_term(t->args[0], env));
      } catch (const DecodeError& e) {
        throw EvalError(std::string("neg: ") + e.what());
      }
  }
  throw std::logic_error("unreachable term kind");
}

namespace {

using FKind = Formula::Kind;

struct EvalCtx {
  uint64_t fuel;
  const TheoryRegistry& reg;
  uint64_t max_probe = 0;
};

Truth ev(const FormulaPtr& f, Env& env, EvalCtx& ctx);

Truth truth_of(bool b) { return b ? Truth::True : Truth::False; }

// p codes a checking proof whose conclusion is the formula coded by fv.
bool proof_atom_holds(const std::string& theory, const Nat& p, const Nat& fv,
                      EvalCtx& ctx) {
  Proof pr;
  FormulaPtr target;
  try {
    pr = decode_proof(p);
    target = decode_formula(fv);
  } catch (const DecodeError&) {
    return false;
  }
  if (!pr.conclusion() || !formula_equal(pr.conclusion(), target)) return false;
  return check_proof(ctx.reg.resolve(theory), pr, ctx.reg).ok;
}

Truth oracle_atom_status(const std::string& theory, int level, const Nat& p,
                         const Nat& fv, EvalCtx& ctx) {
  Proof pr;
  FormulaPtr target;
  try {
    pr = decode_proof(p);
    target = decode_formula(fv);
  } catch (const DecodeError&) {
    return Truth::False;
  }
  if (!pr.conclusion() || !formula_equal(pr.conclusion(), target)) return Truth::False;
  return check_oracle_proof(ctx.reg.resolve(theory), level, pr, ctx.fuel, ctx.reg).status;
}

// E v. (... & v = t & ...) with v not in t has exactly one possible witness,
// so both truth values become certifiable. This is what keeps diagonal
// fixpoints desk-evaluable. Any conjunct of the matrix pins the witness.
std::optional<TermPtr> definitional_in(const FormulaPtr& f, const std::string& v) {
  if (f->kind == FKind::And) {
    if (auto l = definitional_in(f->subs[0], v)) return l;
    return definitional_in(f->subs[1], v);
  }
  if (f->kind != FKind::Eq) return std::nullopt;
  if (f->terms[0]->kind == Term::Kind::Var && f->terms[0]->name == v &&
      !term_contains_var(f->terms[1], v))
    return f->terms[1];
  if (f->terms[1]->kind == Term::Kind::Var && f->terms[1]->name == v &&
      !term_contains_var(f->terms[0], v))
    return f->terms[0];
  return std::nullopt;
}

std::optional<TermPtr> definitional_term(const FormulaPtr& body, const std::string& v) {
  return definitional_in(body, v);
}

Truth ev_exists(const FormulaPtr& f, Env& env, EvalCtx& ctx) {
  const std::string& v = f->var;
  const FormulaPtr& body = f->subs[0];

  if (auto dt = definitional_term(body, v)) {
    Nat val = eval_term(*dt, env);
    auto saved = env.find(v) != env.end() ? std::optional<Nat>(env[v]) : std::nullopt;
    env[v] = val;
    Truth r = ev(body, env, ctx);
    if (saved) env[v] = *saved; else env.erase(v);
    return r;
  }

  // E p. Proof[T](p, t): the r.e. witness search behind the box, realized by
  // bounded_search with budget = fuel. Sound and monotone; a found proof is
  // a genuine witness even though its code exceeds any feasible fuel.
  if ((body->kind == FKind::ProofP || body->kind == FKind::OracleProofP) &&
      body->terms[0]->kind == Term::Kind::Var && body->terms[0]->name == v &&
      !term_contains_var(body->terms[1], v)) {
    try {
      FormulaPtr goal = decode_formula(eval_term(body->terms[1], env));
      TheorySpec spec = ctx.reg.resolve(body->theory);
      int olevel = body->kind == FKind::OracleProofP ? body->level : -1;
      if (bounded_search(spec, goal, ctx.fuel, ctx.reg, olevel, ctx.fuel))
        return Truth::True;
    } catch (const DecodeError&) {
    } catch (const EvalError&) {
    }
  }

  auto saved = env.find(v) != env.end() ? std::optional<Nat>(env[v]) : std::nullopt;
  Truth out = Truth::Unknown;
  for (uint64_t k = 0; k <= ctx.fuel; ++k) {
    ctx.max_probe = std::max(ctx.max_probe, k);
    env[v] = Nat(k);
    Truth r = ev(body, env, ctx);
    if (r == Truth::True) {
      out = Truth::True;
      break;
    }
  }
  if (saved) env[v] = *saved; else env.erase(v);
  return out;  // never certifies False: witnesses beyond fuel stay possible
}

Truth ev(const FormulaPtr& f, Env& env, EvalCtx& ctx) {
  switch (f->kind) {
    case FKind::Less:
      return truth_of(eval_term(f->terms[0], env) < eval_term(f->terms[1], env));
    case FKind::Eq:
      return truth_of(eval_term(f->terms[0], env) == eval_term(f->terms[1], env));
    case FKind::TrueN: {
      Nat code = eval_term(f->terms[0], env);
      FormulaPtr s;
      try {
        s = decode_formula(code);
      } catch (const DecodeError&) {
        return Truth::False;
      }
      if (!is_sentence(s)) return Truth::False;
      if (!is_in_class(s, FormulaClass::sigma1(f->level))) return Truth::False;
      Env fresh;
      return ev(s, fresh, ctx);
    }
    case FKind::ProofP:
      return truth_of(proof_atom_holds(f->theory, eval_term(f->terms[0], env),
                                       eval_term(f->terms[1], env), ctx));
    case FKind::OracleProofP:
      return oracle_atom_status(f->theory, f->level, eval_term(f->terms[0], env),
                                eval_term(f->terms[1], env), ctx);
    case FKind::Not: {
      Truth r = ev(f->subs[0], env, ctx);
      if (r == Truth::True) return Truth::False;
      if (r == Truth::False) return Truth::True;
      return Truth::Unknown;
    }
    case FKind::And: {
      Truth l = ev(f->subs[0], env, ctx);
      if (l == Truth::False) return Truth::False;
      Truth r = ev(f->subs[1], env, ctx);
      if (r == Truth::False) return Truth::False;
      if (l == Truth::True && r == Truth::True) return Truth::True;
      return Truth::Unknown;
    }
    case FKind::Or: {
      Truth l = ev(f->subs[0], env, ctx);
      if (l == Truth::True) return Truth::True;
      Truth r = ev(f->subs[1], env, ctx);
      if (r == Truth::True) return Truth::True;
      if (l == Truth::False && r == Truth::False) return Truth::False;
      return Truth::Unknown;
    }
    case FKind::Implies: {
      Truth l = ev(f->subs[0], env, ctx);
      if (l == Truth::False) return Truth::True;
      Truth r = ev(f->subs[1], env, ctx);
      if (r == Truth::True) return Truth::True;
      if (l == Truth::True && r == Truth::False) return Truth::False;
      return Truth::Unknown;
    }
    case FKind::BForall:
    case FKind::BExists: {
      bool is_all = f->kind == FKind::BForall;
      Nat bound = eval_term(f->terms[0], env);
      auto saved =
          env.find(f->var) != env.end() ? std::optional<Nat>(env[f->var]) : std::nullopt;
      bool any_unknown = false;
      Truth out = is_all ? Truth::True : Truth::False;
      for (Nat k = 0; k < bound; ++k) {
        env[f->var] = k;
        Truth r = ev(f->subs[0], env, ctx);
        if (is_all && r == Truth::False) { out = Truth::False; any_unknown = false; break; }
        if (!is_all && r == Truth::True) { out = Truth::True; any_unknown = false; break; }
        if (r == Truth::Unknown) any_unknown = true;
      }
      if (saved) env[f->var] = *saved; else env.erase(f->var);
      return any_unknown ? Truth::Unknown : out;
    }
    case FKind::Forall: {
      auto saved =
          env.find(f->var) != env.end() ? std::optional<Nat>(env[f->var]) : std::nullopt;
      Truth out = Truth::Unknown;
      for (uint64_t k = 0; k <= ctx.fuel; ++k) {
        ctx.max_probe = std::max(ctx.max_probe, k);
        env[f->var] = Nat(k);
        if (ev(f->subs[0], env, ctx) == Truth::False) {
          out = Truth::False;  // refutation certifies falsity
          break;
        }
      }
      if (saved) env[f->var] = *saved; else env.erase(f->var);
      return out;  // never certifies True: values beyond fuel unchecked
    }
    case FKind::Exists:
      return ev_exists(f, env, ctx);
  }
  throw std::logic_error("unreachable formula kind");
}

}  // namespace

bool eval_delta0(const FormulaPtr& f, const Env& env, const TheoryRegistry& reg) {
  if (!is_in_class(f, FormulaClass::delta0()))
    throw EvalError("eval_delta0: input is not Delta0: " + render(f));
  for (const auto& v : free_vars(f))
    if (!env.count(v)) throw EvalError("eval_delta0: environment misses " + v);
  EvalCtx ctx{0, reg};
  Env e = env;
  Truth t = ev(f, e, ctx);
  if (t == Truth::Unknown) throw std::logic_error("Delta0 evaluation was not certain");
  return t == Truth::True;
}

Verdict eval_with_fuel(const FormulaPtr& f, uint64_t fuel, const TheoryRegistry& reg) {
  if (!is_sentence(f))
    throw EvalError("eval_with_fuel: not a sentence; free: " + [&] {
      std::string s;
      for (const auto& v : free_vars(f)) s += v + " ";
      return s;
    }());
  EvalCtx ctx{fuel, reg};
  Env env;
  Truth t = ev(f, env, ctx);
  return {t, ctx.max_probe};
}

Verdict true_sigma(const FormulaPtr& f, int n, uint64_t fuel, const TheoryRegistry& reg) {
  if (n < 0) throw EvalError("true_sigma: level must be >= 0");
  if (!is_in_class(f, FormulaClass::sigma1(n + 1)))
    throw EvalError("true_sigma: input is not within Sigma1Class(" +
                    std::to_string(n + 1) + "): " + render(f));
  return eval_with_fuel(f, fuel, reg);
}

}  // namespace fgh
