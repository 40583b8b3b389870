#ifndef FGH_PRINTER_HPP
#define FGH_PRINTER_HPP

#include <string>
#include <vector>

#include "fgh/formula.hpp"

namespace fgh {

// Deterministic, fully parenthesized ASCII rendering; parse(render(f)) == f.
std::string render(const TermPtr& t);
std::string render(const FormulaPtr& f);

struct ParseResult {
  FormulaPtr ast;
  std::vector<std::string> warnings;  // e.g. unbound variables
};

// Parses the grammar described in the README. Unicode connectives and
// quantifiers are accepted on input; decimal literals >= 2 abbreviate
// numerals. Throws ParseError with a byte offset.
ParseResult parse_formula(const std::string& text);
TermPtr parse_term(const std::string& text);

}  // namespace fgh

#endif
