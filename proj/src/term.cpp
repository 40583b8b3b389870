#include "fgh/term.hpp"

#include <stdexcept>

namespace fgh {

namespace {
TermPtr mk(Term::Kind k, std::string n, std::vector<TermPtr> a) {
  return std::make_shared<Term>(k, std::move(n), std::move(a));
}
}  // namespace

namespace tm {

TermPtr zero() {
  static const TermPtr z = mk(Term::Kind::Zero, "", {});
  return z;
}

TermPtr one() {
  static const TermPtr o = mk(Term::Kind::One, "", {});
  return o;
}

TermPtr var(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return mk(Term::Kind::Var, name, {});
}

TermPtr exp(TermPtr t) { return mk(Term::Kind::Exp, "", {std::move(t)}); }
TermPtr add(TermPtr l, TermPtr r) { return mk(Term::Kind::Add, "", {std::move(l), std::move(r)}); }
TermPtr mul(TermPtr l, TermPtr r) { return mk(Term::Kind::Mul, "", {std::move(l), std::move(r)}); }

TermPtr sub(TermPtr u, TermPtr v, TermPtr w) {
  return mk(Term::Kind::Sub, "", {std::move(u), std::move(v), std::move(w)});
}
TermPtr imp_code(TermPtr a, TermPtr b) {
  return mk(Term::Kind::ImpCode, "", {std::move(a), std::move(b)});
}
TermPtr all_code(TermPtr v, TermPtr a) {
  return mk(Term::Kind::AllCode, "", {std::move(v), std::move(a)});
}
TermPtr not_code(TermPtr a) { return mk(Term::Kind::NotCode, "", {std::move(a)}); }

}  // namespace tm

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name) return false;
  if (a->args.size() != b->args.size()) return false;
  for (size_t i = 0; i < a->args.size(); ++i)
    if (!term_equal(a->args[i], b->args[i])) return false;
  return true;
}

void collect_term_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->kind == Term::Kind::Var) {
    out.insert(t->name);
    return;
  }
  for (const auto& a : t->args) collect_term_vars(a, out);
}

bool term_contains_var(const TermPtr& t, const std::string& v) {
  if (t->kind == Term::Kind::Var) return t->name == v;
  for (const auto& a : t->args)
    if (term_contains_var(a, v)) return true;
  return false;
}

bool term_has_any_var(const TermPtr& t) {
  if (t->kind == Term::Kind::Var) return true;
  for (const auto& a : t->args)
    if (term_has_any_var(a)) return true;
  return false;
}

TermPtr term_substitute(const TermPtr& t, const std::string& v, const TermPtr& r) {
  if (t->kind == Term::Kind::Var) return t->name == v ? r : t;
  if (t->args.empty()) return t;
  if (!term_contains_var(t, v)) return t;
  std::vector<TermPtr> args;
  args.reserve(t->args.size());
  for (const auto& a : t->args) args.push_back(term_substitute(a, v, r));
  return std::make_shared<Term>(t->kind, t->name, std::move(args));
}

}  // namespace fgh
