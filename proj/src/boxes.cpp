#include "fgh/boxes.hpp"

#include "fgh/coding.hpp"

namespace fgh {

namespace {

// Bound variables inside level-k templates carry a level suffix so that
// nesting a template inside another never captures.
std::string lv(const char* stem, int n) { return std::string(stem) + std::to_string(n); }

}  // namespace

FormulaPtr box_formula(const TheorySpec& theory, const std::string& v) {
  std::string p = v == "p" ? "p0" : "p";
  return fm::exists(p, fm::proof_p(theory.name, tm::var(p), tm::var(v)));
}

FormulaPtr oracle_box_formula(const TheorySpec& theory, int n, const std::string& v) {
  if (n < 0) throw std::invalid_argument("oracle level must be >= 0");
  std::string p = v == "p" ? "p0" : "p";
  return fm::exists(p, fm::oracle_proof_p(theory.name, n, tm::var(p), tm::var(v)));
}

FormulaPtr boxbox_dual_formula(const TheorySpec& theory, int n, const std::string& v) {
  return fm::lnot(boxbox_formula(theory, n, v));
}

namespace {

// Shared builder for both recursions; lo = hi gives the single-disjunct
// scheme, lo = 0 the cumulative one.
FormulaPtr boxbox_from(const TheorySpec& theory, int n, const std::string& v, int lo) {
  if (n == 0) return box_formula(theory, v);
  std::string w = lv("w", n);
  std::string p = lv("p", n);
  FormulaPtr disj;
  for (int m = lo; m <= n - 1; ++m) {
    // dia_m as a formula of the witness variable w
    std::string u = lv("u", m);
    FormulaPtr dia_m_u = fm::lnot(m == 0 ? box_formula(theory, u)
                                         : boxbox_from(theory, m, u, lo == 0 ? 0 : m - 1));
    FormulaPtr dia_m_w = substitute(dia_m_u, u, tm::var(w));
    // code of (dia_m(wbar) -> decode(v)), built from the template's code
    TermPtr dia_code = tm::sub(numeral(encode(dia_m_u)), numeral(encode(tm::var(u))),
                               tm::var(w));
    TermPtr impl_code = tm::imp_code(dia_code, tm::var(v));
    FormulaPtr inner_box = fm::exists(p, fm::proof_p(theory.name, tm::var(p), impl_code));
    FormulaPtr disjunct = fm::land(dia_m_w, inner_box);
    disj = disj ? fm::lor(disj, disjunct) : disjunct;
  }
  return fm::lor(box_formula(theory, v), fm::exists(w, disj));
}

}  // namespace

FormulaPtr boxbox_formula(const TheorySpec& theory, int n, const std::string& v) {
  if (n < 0) throw std::invalid_argument("boxbox level must be >= 0");
  return boxbox_from(theory, n, v, 0);
}

FormulaPtr boxbox_old_formula(const TheorySpec& theory, int n, const std::string& v) {
  if (n < 0) throw std::invalid_argument("boxbox level must be >= 0");
  if (n == 0) return box_formula(theory, v);
  return boxbox_from(theory, n, v, n - 1);
}

FormulaPtr omega_box_formula(const TheorySpec& theory, int n, const std::string& v) {
  if (n < 0) throw std::invalid_argument("omega level must be >= 0");
  if (n == 0) return box_formula(theory, v);
  std::string g = lv("g", n);
  std::string x = lv("x", n);
  std::string p = lv("p", n);
  std::string u = lv("u", n);
  // A x. omega_{n-1} holds of the code of (decode(g) at the numeral of x)
  FormulaPtr prev = omega_box_formula(theory, n - 1, u);
  TermPtr inst_code = tm::sub(tm::var(g), numeral(encode(tm::var(x))), tm::var(x));
  FormulaPtr all_prev = fm::forall(x, substitute(prev, u, inst_code));
  // box over the code of ((A x. decode(g)) -> decode(v))
  TermPtr impl_code =
      tm::imp_code(tm::all_code(numeral(encode(tm::var(x))), tm::var(g)), tm::var(v));
  FormulaPtr box_impl = fm::exists(p, fm::proof_p(theory.name, tm::var(p), impl_code));
  return fm::exists(g, fm::land(all_prev, box_impl));
}

}  // namespace fgh
