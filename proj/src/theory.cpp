#include "fgh/theory.hpp"

#include "fgh/coding.hpp"
#include "fgh/hierarchy.hpp"
#include "fgh/semantics.hpp"

namespace fgh {

namespace {

using namespace tm;
using namespace fm;

TermPtr v(const char* n) { return var(n); }

// The finite list of universally closed defining laws of toyEA.
const std::vector<FormulaPtr>& toy_laws() {
  static const std::vector<FormulaPtr> laws = [] {
    TermPtr x = v("x"), y = v("y"), z = v("z");
    TermPtr two = add(one(), one());
    std::vector<FormulaPtr> l;
    auto all1 = [&](FormulaPtr f) { return forall("x", f); };
    auto all2 = [&](FormulaPtr f) { return forall("x", forall("y", f)); };
    auto all3 = [&](FormulaPtr f) { return forall("x", forall("y", forall("z", f))); };
    l.push_back(all1(eq(add(x, zero()), x)));
    l.push_back(all1(eq(add(zero(), x), x)));
    l.push_back(all2(eq(add(x, y), add(y, x))));
    l.push_back(all3(eq(add(add(x, y), z), add(x, add(y, z)))));
    l.push_back(all1(eq(mul(x, zero()), zero())));
    l.push_back(all1(eq(mul(x, one()), x)));
    l.push_back(all2(eq(mul(x, y), mul(y, x))));
    l.push_back(all3(eq(mul(mul(x, y), z), mul(x, mul(y, z)))));
    l.push_back(all3(eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))));
    l.push_back(eq(exp(zero()), one()));
    l.push_back(all1(eq(exp(add(x, one())), mul(exp(x), two))));
    l.push_back(all1(lnot(less(x, x))));
    l.push_back(all3(implies(land(less(x, y), less(y, z)), less(x, z))));
    l.push_back(all2(lor(less(x, y), lor(eq(x, y), less(y, x)))));
    l.push_back(all1(less(zero(), add(x, one()))));
    l.push_back(all1(lnot(less(x, zero()))));
    l.push_back(all2(implies(less(x, add(y, one())), lor(less(x, y), eq(x, y)))));
    l.push_back(all1(less(x, exp(x))));
    return l;
  }();
  return laws;
}

constexpr size_t kInductionSizeCap = 64;

// (phi(0) & A x. (phi(x) -> phi(x+1))) -> A x. phi(x), phi Delta0 and small.
bool is_induction_instance(const FormulaPtr& f) {
  if (f->kind != Formula::Kind::Implies) return false;
  const FormulaPtr& prem = f->subs[0];
  const FormulaPtr& concl = f->subs[1];
  if (prem->kind != Formula::Kind::And) return false;
  if (concl->kind != Formula::Kind::Forall) return false;
  const std::string& x = concl->var;
  const FormulaPtr& phi = concl->subs[0];
  if (formula_size(phi) > kInductionSizeCap) return false;
  if (!is_in_class(phi, FormulaClass::delta0())) return false;
  {
    auto fv = free_vars(phi);
    fv.erase(x);
    if (!fv.empty()) return false;
  }
  const FormulaPtr& base = prem->subs[0];
  const FormulaPtr& step = prem->subs[1];
  if (!formula_equal(base, substitute(phi, x, zero()))) return false;
  if (step->kind != Formula::Kind::Forall || step->var != x) return false;
  if (step->subs[0]->kind != Formula::Kind::Implies) return false;
  if (!formula_equal(step->subs[0]->subs[0], phi)) return false;
  return formula_equal(step->subs[0]->subs[1], substitute(phi, x, add(var(x), one())));
}

bool toy_ea_recognizes(const FormulaPtr& f) {
  for (const auto& l : toy_laws())
    if (formula_equal(f, l)) return true;
  if (is_induction_instance(f)) return true;
  if (!is_sentence(f)) return false;
  if (!is_in_class(f, FormulaClass::delta0())) return false;
  try {
    return eval_delta0(f, {}, TheoryRegistry::builtin());
  } catch (const EvalError&) {
    return false;
  } catch (const DecodeError&) {
    return false;
  }
}

struct ParsedName {
  std::string root;
  std::vector<FormulaPtr> extras;
};

ParsedName parse_theory_name(const std::string& name) {
  ParsedName out;
  size_t plus = name.find("+{");
  out.root = name.substr(0, plus);
  size_t i = plus;
  while (i != std::string::npos && i < name.size()) {
    size_t close = name.find('}', i);
    if (close == std::string::npos) throw EvalError("malformed theory name: " + name);
    std::string group = name.substr(i + 2, close - i - 2);
    size_t p = 0;
    while (p < group.size()) {
      size_t comma = group.find(',', p);
      std::string num = group.substr(p, comma == std::string::npos ? comma : comma - p);
      if (num.empty()) throw EvalError("malformed theory name: " + name);
      out.extras.push_back(decode_formula(Nat(num)));
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    i = name.find("+{", close);
  }
  return out;
}

}  // namespace

const TheoryRegistry& TheoryRegistry::builtin() {
  static const TheoryRegistry reg;
  return reg;
}

TheorySpec TheoryRegistry::resolve(const std::string& name) const {
  ParsedName pn = parse_theory_name(name);
  std::function<bool(const FormulaPtr&)> base;
  if (pn.root == "pure") {
    base = [](const FormulaPtr&) { return false; };
  } else if (pn.root == "toyEA") {
    base = toy_ea_recognizes;
  } else {
    throw EvalError("unknown theory: " + pn.root);
  }
  if (pn.extras.empty()) return {name, base};
  auto extras = std::make_shared<std::vector<FormulaPtr>>(pn.extras);
  return {name, [base, extras](const FormulaPtr& f) {
            if (base(f)) return true;
            for (const auto& e : *extras)
              if (formula_equal(f, e)) return true;
            return false;
          }};
}

TheorySpec TheoryRegistry::extend(const TheorySpec& base,
                                  const std::vector<FormulaPtr>& extra) const {
  if (extra.empty()) return base;
  std::string name = base.name + "+{";
  for (size_t i = 0; i < extra.size(); ++i) {
    if (i) name += ",";
    name += encode(extra[i]).str();
  }
  name += "}";
  return resolve(name);
}

size_t formula_size(const FormulaPtr& f) {
  size_t n = 1;
  std::function<void(const TermPtr&)> tcount = [&](const TermPtr& t) {
    n += 1;
    for (const auto& a : t->args) tcount(a);
  };
  for (const auto& t : f->terms) tcount(t);
  for (const auto& s : f->subs) n += formula_size(s);
  return n;
}

}  // namespace fgh
