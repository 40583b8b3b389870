#ifndef FGH_TERM_HPP
#define FGH_TERM_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fgh/nat.hpp"

namespace fgh {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// Terms of the arithmetic object language {0, 1, exp, +, *, <} plus the
// semantic code-builder symbols (sub, imp, all, neg). The code builders
// denote elementary syntax functions on Goedel numbers; their standard-model
// interpretation lives in coding.cpp. Terms are immutable after construction
// and may be shared freely between threads.
class Term {
 public:
  enum class Kind {
    Zero,
    One,
    Var,
    Exp,
    Add,
    Mul,
    Sub,      // sub(u, v, w): code of decode(u) with numeral(w) for variable coded v
    ImpCode,  // imp(a, b):    code of (decode(a) -> decode(b))
    AllCode,  // all(v, a):    code of (A x. decode(a)) where v codes variable x
    NotCode,  // neg(a):       code of ~decode(a)
  };

  Kind kind;
  std::string name;          // Var only
  std::vector<TermPtr> args; // children, arity fixed per kind

  Term(Kind k, std::string n, std::vector<TermPtr> a)
      : kind(k), name(std::move(n)), args(std::move(a)) {}
};

namespace tm {
TermPtr zero();
TermPtr one();
TermPtr var(const std::string& name);
TermPtr exp(TermPtr t);
TermPtr add(TermPtr l, TermPtr r);
TermPtr mul(TermPtr l, TermPtr r);
TermPtr sub(TermPtr u, TermPtr v, TermPtr w);
TermPtr imp_code(TermPtr a, TermPtr b);
TermPtr all_code(TermPtr v, TermPtr a);
TermPtr not_code(TermPtr a);
}  // namespace tm

bool term_equal(const TermPtr& a, const TermPtr& b);
void collect_term_vars(const TermPtr& t, std::set<std::string>& out);
bool term_contains_var(const TermPtr& t, const std::string& v);
bool term_has_any_var(const TermPtr& t);

// Replace every occurrence of variable v by r.
TermPtr term_substitute(const TermPtr& t, const std::string& v, const TermPtr& r);

}  // namespace fgh

#endif
