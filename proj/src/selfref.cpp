#include "fgh/selfref.hpp"

#include "fgh/coding.hpp"
#include "fgh/hierarchy.hpp"
#include "fgh/printer.hpp"

namespace fgh {

namespace {

using FKind = Formula::Kind;

void require_ex_shape(const FormulaPtr& f, const char* who) {
  if (f->kind != FKind::Exists)
    throw ShapeError(std::string(who) + ": operand is not existentially shaped: " +
                     render(f));
}

// Comparison template. strict decides between y < x and y < x + 1.
FormulaPtr wc(const FormulaPtr& phi, const FormulaPtr& psi, bool strict, const char* who) {
  require_ex_shape(phi, who);
  require_ex_shape(psi, who);
  std::string x = phi->var;
  FormulaPtr phi0 = phi->subs[0];
  if (free_vars(psi).count(x)) {  // keep psi's free occurrences of x free
    std::string x2 = fresh_var({phi, psi}, x);
    phi0 = substitute(phi0, x, tm::var(x2));
    x = x2;
  }
  std::string y = fresh_var({phi, psi}, "y");
  FormulaPtr psi0_y = substitute(psi->subs[0], psi->var, tm::var(y));
  TermPtr bound = strict ? tm::add(tm::var(x), tm::one()) : TermPtr(tm::var(x));
  return fm::exists(x, fm::land(phi0, fm::bforall(y, bound, fm::lnot(psi0_y))));
}

}  // namespace

FormulaPtr wc_leq(const FormulaPtr& phi, const FormulaPtr& psi) {
  return wc(phi, psi, false, "wc_leq");
}

FormulaPtr wc_less(const FormulaPtr& phi, const FormulaPtr& psi) {
  return wc(phi, psi, true, "wc_less");
}

FormulaPtr normalize_existential(const FormulaPtr& f) {
  std::string d = fresh_var({f}, "d");
  return fm::exists(d, fm::land(fm::eq(tm::var(d), tm::var(d)), f));
}

FormulaPtr diagonal_fixpoint(const FormulaPtr& psi, const std::string& x,
                             const std::string& y) {
  {
    auto fv = free_vars(psi);
    fv.erase(x);
    fv.erase(y);
    if (!fv.empty())
      throw ShapeError("diagonal_fixpoint: psi has free variables besides {" + x + "," +
                       y + "}");
  }
  // theta(x, y) := E z2. (z2 = sub(x, code "y", y) & psi[x := z2])
  std::string z2 = fresh_var({psi}, "z");
  FormulaPtr theta = fm::exists(
      z2, fm::land(fm::eq(tm::var(z2),
                          tm::sub(tm::var(x), numeral(encode(tm::var(y))), tm::var(y))),
                   substitute(psi, x, tm::var(z2))));
  // gamma(x, y) := E z1. (z1 = sub(x, code "x", x) & theta[x := z1])
  std::string z1 = fresh_var({theta}, "z");
  FormulaPtr gamma = fm::exists(
      z1, fm::land(fm::eq(tm::var(z1),
                          tm::sub(tm::var(x), numeral(encode(tm::var(x))), tm::var(x))),
                   substitute(theta, x, tm::var(z1))));
  // phi(y) := gamma[x := numeral(code gamma)]; then over NN the value of z1
  // is the code of phi(y) itself and z2 picks up the code of phi(ybar).
  return substitute_numeral(gamma, x, encode(gamma));
}

FormulaPtr closed_fixpoint(const FormulaPtr& psi, const std::string& x) {
  std::string y = fresh_var({psi}, "y");
  return substitute_numeral(diagonal_fixpoint(psi, x, y), y, 0);
}

FormulaPtr rosser_sentence(const TheorySpec& theory) {
  FormulaPtr box_not = fm::exists(
      "p", fm::proof_p(theory.name, tm::var("p"), tm::not_code(tm::var("x"))));
  FormulaPtr box = fm::exists("q", fm::proof_p(theory.name, tm::var("q"), tm::var("x")));
  return closed_fixpoint(wc_leq(box_not, box), "x");
}

BoxMaker BoxMaker::plain(const TheorySpec& t) { return {t, 0, box_formula(t)}; }
BoxMaker BoxMaker::oracle(const TheorySpec& t, int n) {
  return {t, n, oracle_box_formula(t, n)};
}

FormulaPtr fgh_fixpoint(const FormulaPtr& sigma, const BoxMaker& box) {
  require_ex_shape(sigma, "fgh_fixpoint");
  if (!is_sentence(sigma)) throw ShapeError("fgh_fixpoint: sigma must be a sentence");
  if (!is_in_class(sigma, FormulaClass::sigma1(box.level + 1)))
    throw ShapeError("fgh_fixpoint: sigma not within Sigma1Class(" +
                     std::to_string(box.level + 1) + ")");
  std::string x = fresh_var({sigma, box.predicate}, "x");
  FormulaPtr box_x = substitute(box.predicate, "v", tm::var(x));
  return closed_fixpoint(wc_leq(sigma, box_x), x);
}

FormulaPtr dual_fixpoint_leq(const FormulaPtr& sigma, const TheorySpec& theory) {
  require_ex_shape(sigma, "dual_fixpoint_leq");
  std::string x = fresh_var({sigma}, "x");
  FormulaPtr box_not = fm::exists(
      "p", fm::proof_p(theory.name, tm::var("p"), tm::not_code(tm::var(x))));
  return closed_fixpoint(wc_leq(box_not, sigma), x);
}

FormulaPtr dual_fixpoint_not_less(const FormulaPtr& sigma, const TheorySpec& theory) {
  require_ex_shape(sigma, "dual_fixpoint_not_less");
  // Build chi <-> (box ~chi < sigma); the fixpoint itself is rho := ~chi, so
  // the box atoms inside chi speak about the code of rho and the output is
  // literally the negation of a comparison template.
  std::string x = fresh_var({sigma}, "x");
  FormulaPtr box_not = fm::exists(
      "p", fm::proof_p(theory.name, tm::var("p"), tm::not_code(tm::var(x))));
  FormulaPtr chi = closed_fixpoint(wc_less(box_not, sigma), x);
  return fm::lnot(chi);
}

OrCombination or_combinator(const FormulaPtr& phi, const FormulaPtr& psi, int n,
                            const TheorySpec& theory) {
  // [n]phi \/ [n]psi collapses to one existential over the shared witness.
  FormulaPtr left = fm::oracle_proof_p(theory.name, n, tm::var("p"),
                                       numeral(encode(phi)));
  FormulaPtr right = fm::oracle_proof_p(theory.name, n, tm::var("p"),
                                        numeral(encode(psi)));
  OrCombination out;
  out.sigma = fm::exists("p", fm::lor(left, right));
  out.rho = fgh_fixpoint(out.sigma, BoxMaker::oracle(theory, n));
  out.box_rho = substitute_numeral(oracle_box_formula(theory, n), "v", encode(out.rho));
  return out;
}

FormulaPtr and_combinator(const FormulaPtr& phi, const FormulaPtr& psi, int n,
                          const TheorySpec& theory) {
  return substitute_numeral(oracle_box_formula(theory, n), "v",
                            encode(fm::land(phi, psi)));
}

FormulaPtr dense_between(const FormulaPtr& sigma0, const FormulaPtr& sigma2,
                         const TheorySpec& theory, const TheoryRegistry& reg) {
  TheorySpec extended = reg.extend(theory, {fm::lnot(sigma0), sigma2});
  FormulaPtr rho = rosser_sentence(extended);
  return fm::lor(sigma0, fm::land(rho, sigma2));
}

}  // namespace fgh
