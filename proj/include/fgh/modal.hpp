#ifndef FGH_MODAL_HPP
#define FGH_MODAL_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "fgh/nat.hpp"

namespace fgh {

class ModalFormula;
using MPtr = std::shared_ptr<const ModalFormula>;

// Polymodal syntax with [n] boxes for every natural level. <n> is
// definitional: the dia factory and the parser rewrite it to ~[n]~ on the
// spot, so downstream code only ever sees Box.
class ModalFormula {
 public:
  enum class Kind { Atom, Bot, Not, And, Or, Implies, Box };
  Kind kind;
  std::string name;  // Atom
  int level = -1;    // Box
  std::vector<MPtr> kids;

  ModalFormula(Kind k, std::string n, int lv, std::vector<MPtr> ks)
      : kind(k), name(std::move(n)), level(lv), kids(std::move(ks)) {}
};

namespace md {
MPtr atom(const std::string& name);
MPtr bot();
MPtr top();  // ~F
MPtr mnot(MPtr a);
MPtr mand(MPtr a, MPtr b);
MPtr mor(MPtr a, MPtr b);
MPtr mimplies(MPtr a, MPtr b);
MPtr box(int level, MPtr a);
MPtr dia(int level, MPtr a);  // ~[n]~a
}  // namespace md

bool modal_equal(const MPtr& a, const MPtr& b);
std::set<std::string> modal_atoms(const MPtr& f);
std::set<int> modal_levels(const MPtr& f);

// Replace every occurrence of the named atom by g.
MPtr modal_substitute(const MPtr& f, const std::string& atom, const MPtr& g);

std::string render_modal(const MPtr& f);
MPtr parse_modal(const std::string& text);  // throws ParseError

}  // namespace fgh

#endif
