#include "fgh/printer.hpp"

#include <sstream>

namespace fgh {

namespace {

void render_term(std::ostream& os, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: os << "0"; return;
    case Term::Kind::One: os << "1"; return;
    case Term::Kind::Var: os << t->name; return;
    case Term::Kind::Exp:
      os << "exp(";
      render_term(os, t->args[0]);
      os << ")";
      return;
    case Term::Kind::Add:
      os << "(";
      render_term(os, t->args[0]);
      os << " + ";
      render_term(os, t->args[1]);
      os << ")";
      return;
    case Term::Kind::Mul:
      os << "(";
      render_term(os, t->args[0]);
      os << " * ";
      render_term(os, t->args[1]);
      os << ")";
      return;
    case Term::Kind::Sub:
      os << "sub(";
      render_term(os, t->args[0]);
      os << ", ";
      render_term(os, t->args[1]);
      os << ", ";
      render_term(os, t->args[2]);
      os << ")";
      return;
    case Term::Kind::ImpCode:
      os << "imp(";
      render_term(os, t->args[0]);
      os << ", ";
      render_term(os, t->args[1]);
      os << ")";
      return;
    case Term::Kind::AllCode:
      os << "all(";
      render_term(os, t->args[0]);
      os << ", ";
      render_term(os, t->args[1]);
      os << ")";
      return;
    case Term::Kind::NotCode:
      os << "neg(";
      render_term(os, t->args[0]);
      os << ")";
      return;
  }
}

// Every compound subformula is wrapped in parentheses by its parent; the top
// level stays bare, matching e.g. "E x. (x < 1)".
void render_formula(std::ostream& os, const FormulaPtr& f, bool top) {
  auto wrap = [&](auto emit) {
    if (!top) os << "(";
    emit();
    if (!top) os << ")";
  };
  switch (f->kind) {
    case Formula::Kind::Less:
      wrap([&] {
        render_term(os, f->terms[0]);
        os << " < ";
        render_term(os, f->terms[1]);
      });
      return;
    case Formula::Kind::Eq:
      wrap([&] {
        render_term(os, f->terms[0]);
        os << " = ";
        render_term(os, f->terms[1]);
      });
      return;
    case Formula::Kind::TrueN:
      os << "TrueN[" << f->level << "](";
      render_term(os, f->terms[0]);
      os << ")";
      return;
    case Formula::Kind::ProofP:
      os << "Proof[" << f->theory << "](";
      render_term(os, f->terms[0]);
      os << ", ";
      render_term(os, f->terms[1]);
      os << ")";
      return;
    case Formula::Kind::OracleProofP:
      os << "OProof[" << f->theory << ";" << f->level << "](";
      render_term(os, f->terms[0]);
      os << ", ";
      render_term(os, f->terms[1]);
      os << ")";
      return;
    case Formula::Kind::Not:
      wrap([&] {
        os << "~";
        render_formula(os, f->subs[0], false);
      });
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Implies: {
      const char* op = f->kind == Formula::Kind::And   ? " & "
                       : f->kind == Formula::Kind::Or ? " | "
                                                      : " -> ";
      wrap([&] {
        render_formula(os, f->subs[0], false);
        os << op;
        render_formula(os, f->subs[1], false);
      });
      return;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      const char* q = f->kind == Formula::Kind::Forall ? "A " : "E ";
      wrap([&] {
        os << q << f->var << ". ";
        render_formula(os, f->subs[0], false);
      });
      return;
    }
    case Formula::Kind::BForall:
    case Formula::Kind::BExists: {
      const char* q = f->kind == Formula::Kind::BForall ? "A " : "E ";
      wrap([&] {
        os << q << f->var << " < ";
        render_term(os, f->terms[0]);
        os << ". ";
        render_formula(os, f->subs[0], false);
      });
      return;
    }
  }
}

}  // namespace

std::string render(const TermPtr& t) {
  std::ostringstream os;
  render_term(os, t);
  return os.str();
}

std::string render(const FormulaPtr& f) {
  std::ostringstream os;
  render_formula(os, f, true);
  return os.str();
}

}  // namespace fgh
