#ifndef FGH_HIERARCHY_HPP
#define FGH_HIERARCHY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fgh/formula.hpp"

namespace fgh {

// A point in the hierarchy lattice. Delta0 is the common bottom of
// Sigma/Pi; SigmaBang(n) is the single-existential shape class (E x, Pi(n-1)
// matrix); SigmaB(n) closes Sigma(n) under booleans and bounded quantifiers;
// Sigma1Class(n) prefixes SigmaB(n) with existentials.
struct FormulaClass {
  enum class Kind { Delta0, Sigma, Pi, SigmaBang, SigmaB, Sigma1Class };
  Kind kind = Kind::Delta0;
  int level = 0;  // >= 1 for all kinds except Delta0

  static FormulaClass delta0() { return {Kind::Delta0, 0}; }
  static FormulaClass sigma(int n) { return {Kind::Sigma, n}; }
  static FormulaClass pi(int n) { return {Kind::Pi, n}; }
  static FormulaClass sigma_bang(int n) { return {Kind::SigmaBang, n}; }
  static FormulaClass sigma_b(int n) { return {Kind::SigmaB, n}; }
  static FormulaClass sigma1(int n) { return {Kind::Sigma1Class, n}; }

  bool operator==(const FormulaClass& o) const = default;
};

std::string to_string(const FormulaClass& c);

// Class inclusion (partial order). SigmaBang is a shape class: nothing except
// a smaller SigmaBang lies below it.
bool class_le(const FormulaClass& a, const FormulaClass& b);

struct ClassifyError : std::runtime_error {
  explicit ClassifyError(const std::string& m) : std::runtime_error(m) {}
};

// Syntax-directed membership. Negation is handled by polarity recursion
// (negation-normal-form reading); semantic predicates carry the fiat levels
// documented in the README.
bool is_in_class(const FormulaPtr& f, const FormulaClass& c);

// Least cumulative class derivable for f (ties resolve Delta0 first, then
// Sigma before Pi before SigmaB before Sigma1Class). SigmaBang memberships
// are reported by memberships(), never as the least class. Throws
// ClassifyError when no class of the lattice is derivable (only reachable
// through negated oracle-provability atoms).
FormulaClass classify(const FormulaPtr& f);

// Minimal derivable class of each kind.
std::vector<FormulaClass> memberships(const FormulaPtr& f);

}  // namespace fgh

#endif
