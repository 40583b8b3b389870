#include <doctest.h>

#include <random>

#include "fgh/coding.hpp"
#include "fgh/printer.hpp"

using namespace fgh;
using namespace fgh::fm;
using namespace fgh::tm;

namespace {

TermPtr four() { return numeral(4); }

TermPtr rnd_term(std::mt19937_64& rng, int depth) {
  switch (rng() % (depth > 0 ? 7 : 3)) {
    case 0: return zero();
    case 1: return one();
    case 2: return var(std::vector<std::string>{"x", "y", "z"}[rng() % 3]);
    case 3: return tm::exp(rnd_term(rng, depth - 1));
    case 4: return add(rnd_term(rng, depth - 1), rnd_term(rng, depth - 1));
    case 5: return mul(rnd_term(rng, depth - 1), rnd_term(rng, depth - 1));
    default:
      return tm::sub(rnd_term(rng, depth - 1), rnd_term(rng, depth - 1),
                     rnd_term(rng, depth - 1));
  }
}

FormulaPtr rnd_formula(std::mt19937_64& rng, int depth) {
  switch (rng() % (depth > 0 ? 11 : 4)) {
    case 0: return less(rnd_term(rng, 1), rnd_term(rng, 1));
    case 1: return eq(rnd_term(rng, 1), rnd_term(rng, 1));
    case 2: return true_n(1 + static_cast<int>(rng() % 3), rnd_term(rng, 1));
    case 3:
      return proof_p(rng() % 2 ? "toyEA" : "pure", rnd_term(rng, 1), rnd_term(rng, 1));
    case 4: return lnot(rnd_formula(rng, depth - 1));
    case 5: return land(rnd_formula(rng, depth - 1), rnd_formula(rng, depth - 1));
    case 6: return lor(rnd_formula(rng, depth - 1), rnd_formula(rng, depth - 1));
    case 7: return implies(rnd_formula(rng, depth - 1), rnd_formula(rng, depth - 1));
    case 8: return forall("x", rnd_formula(rng, depth - 1));
    case 9: return exists("y", rnd_formula(rng, depth - 1));
    default: {
      std::string v = std::vector<std::string>{"x", "y", "z"}[rng() % 3];
      TermPtr bound;
      do {
        bound = rnd_term(rng, 1);
      } while (term_contains_var(bound, v));
      FormulaPtr body = rnd_formula(rng, depth - 1);
      return rng() % 2 ? bforall(v, bound, body) : bexists(v, bound, body);
    }
  }
}

}  // namespace

TEST_CASE("parse: grammar cases") {
  FormulaPtr f = parse_formula("E x. x * x = 1 + 1 + 1 + 1").ast;
  FormulaPtr expect =
      exists("x", eq(mul(var("x"), var("x")),
                     add(add(add(one(), one()), one()), one())));
  CHECK(formula_equal(f, expect));

  FormulaPtr g = parse_formula("A y < z. E x. x = y + 1").ast;
  FormulaPtr gexpect =
      bforall("y", var("z"), exists("x", eq(var("x"), add(var("y"), one()))));
  CHECK(formula_equal(g, gexpect));
}

TEST_CASE("parse: error carries an offset") {
  try {
    parse_formula("E x <");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset == 5);
  }
}

TEST_CASE("parse: unbound variables are warned about") {
  ParseResult r = parse_formula("E x. x = y");
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0] == "unbound variable: y");
  CHECK(parse_formula("E x. x = 0").warnings.empty());
}

TEST_CASE("parse: unicode connectives and numeral sugar") {
  CHECK(formula_equal(parse_formula("∃x. x = 0").ast,
                      parse_formula("E x. x = 0").ast));
  CHECK(formula_equal(parse_formula("¬(0 = 1) ∧ (0 < 1)").ast,
                      parse_formula("~(0 = 1) & (0 < 1)").ast));
  CHECK(formula_equal(parse_formula("E x. x = 4").ast,
                      exists("x", eq(var("x"), four()))));
}

TEST_CASE("render: deterministic shapes") {
  CHECK(render(eq(zero(), zero())) == "0 = 0");
  CHECK(render(exists("x", less(var("x"), one()))) == "E x. (x < 1)");
  CHECK(render(bforall("y", var("z"), exists("x", eq(var("x"), add(var("y"), one()))))) ==
        "A y < z. (E x. (x = (y + 1)))");
}

TEST_CASE("render/parse: round trip on random ASTs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    FormulaPtr f = rnd_formula(rng, 3);
    CAPTURE(render(f));
    CHECK(formula_equal(parse_formula(render(f)).ast, f));
  }
}

TEST_CASE("substitute_numeral") {
  FormulaPtr f = less(var("x"), one());
  CHECK(render(substitute_numeral(f, "x", 0)) == "0 < 1");

  FormulaPtr g = exists("x", eq(var("x"), var("y")));
  FormulaPtr g2 = substitute_numeral(g, "y", 2);
  CHECK(formula_equal(g2, exists("x", eq(var("x"), numeral(2)))));

  FormulaPtr h = exists("x", eq(var("x"), zero()));
  CHECK(substitute_numeral(h, "x", 5).get() == h.get());  // x not free

  // closed result when the substituted variable was the only free one
  FormulaPtr open = land(less(var("v"), one()), eq(var("v"), var("v")));
  CHECK(is_sentence(substitute_numeral(open, "v", 3)));
}

TEST_CASE("free_vars") {
  CHECK(free_vars(exists("x", eq(var("x"), var("y")))) == std::set<std::string>{"y"});
  CHECK(free_vars(eq(zero(), zero())).empty());
  CHECK(free_vars(bforall("y", var("z"), less(var("y"), var("x")))) ==
        std::set<std::string>({"z", "x"}));
}

TEST_CASE("bounded quantifier invariant is checked at construction") {
  CHECK_THROWS_AS(bforall("x", add(var("x"), one()), eq(var("x"), zero())),
                  std::invalid_argument);
  CHECK_THROWS_AS(bexists("y", var("y"), eq(var("y"), zero())), std::invalid_argument);
}

TEST_CASE("theory names with extensions survive the round trip") {
  FormulaPtr f = proof_p("toyEA+{9,12}", var("p"), var("f"));
  CHECK(formula_equal(parse_formula(render(f)).ast, f));
  FormulaPtr g = parse_formula("OProof[toyEA;2](p, f)").ast;
  CHECK(g->kind == Formula::Kind::OracleProofP);
  CHECK(g->level == 2);
  CHECK(formula_equal(parse_formula(render(g)).ast, g));
}

TEST_CASE("substitution refuses capture") {
  // substituting a term containing x under a binder for x
  FormulaPtr f = exists("x", eq(var("x"), var("y")));
  CHECK_THROWS_AS(substitute(f, "y", var("x")), ShapeError);
}
