#include <cctype>
#include <optional>

#include "fgh/coding.hpp"
#include "fgh/printer.hpp"

namespace fgh {

namespace {

struct Token {
  enum class Kind { Ident, Number, Punct, BracketName, End };
  Kind kind;
  std::string text;
  size_t offset;
};

const char* kKeywords[] = {"E", "A", "exp", "sub", "imp", "all", "neg",
                           "TrueN", "Proof", "OProof"};

bool is_keyword(const std::string& s) {
  for (const char* k : kKeywords)
    if (s == k) return true;
  return false;
}

// Unicode connectives are accepted on input by rewriting to the ASCII
// surface syntax before lexing.
std::string normalize_unicode(const std::string& in) {
  std::string out;
  out.reserve(in.size());
  for (size_t i = 0; i < in.size();) {
    auto starts = [&](const char* u) {
      size_t n = std::char_traits<char>::length(u);
      return in.compare(i, n, u) == 0 ? n : size_t{0};
    };
    size_t n;
    if ((n = starts("∀"))) { out += "A "; i += n; }        // forall
    else if ((n = starts("∃"))) { out += "E "; i += n; }   // exists
    else if ((n = starts("¬"))) { out += "~"; i += n; }    // not
    else if ((n = starts("∧"))) { out += "&"; i += n; }    // and
    else if ((n = starts("∨"))) { out += "|"; i += n; }    // or
    else if ((n = starts("→"))) { out += "->"; i += n; }   // implies
    else if ((n = starts("·"))) { out += "*"; i += n; }    // cdot
    else if ((n = starts("×"))) { out += "*"; i += n; }    // times
    else { out += in[i]; ++i; }
  }
  return out;
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { tokenize(); }
  const std::vector<Token>& tokens() const { return toks_; }

 private:
  void tokenize() {
    size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
      if (std::isdigit(static_cast<unsigned char>(c))) {
        size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        toks_.push_back({Token::Kind::Number, text_.substr(i, j - i), i});
        i = j;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        size_t j = i;
        while (j < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_' ||
                text_[j] == '\''))
          ++j;
        std::string word = text_.substr(i, j - i);
        toks_.push_back({Token::Kind::Ident, word, i});
        i = j;
        // "Proof[...](" and friends carry a bracketed name; capture it raw so
        // extension names like toyEA+{12,34} survive.
        if ((word == "Proof" || word == "OProof" || word == "TrueN") && i < text_.size() &&
            text_[i] == '[') {
          size_t k = i + 1;
          while (k < text_.size() && text_[k] != ']') ++k;
          if (k >= text_.size()) throw ParseError("unterminated '['", text_.size());
          toks_.push_back({Token::Kind::BracketName, text_.substr(i + 1, k - i - 1), i + 1});
          i = k + 1;
        }
        continue;
      }
      if (c == '-' && i + 1 < text_.size() && text_[i + 1] == '>') {
        toks_.push_back({Token::Kind::Punct, "->", i});
        i += 2;
        continue;
      }
      if (std::string("()<=~&|.,+*").find(c) != std::string::npos) {
        toks_.push_back({Token::Kind::Punct, std::string(1, c), i});
        ++i;
        continue;
      }
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
    toks_.push_back({Token::Kind::End, "", text_.size()});
  }

  const std::string& text_;
  std::vector<Token> toks_;
};

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  FormulaPtr formula_all() {
    FormulaPtr f = formula();
    expect_end();
    return f;
  }

  TermPtr term_all() {
    TermPtr t = term();
    expect_end();
    return t;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  bool at_punct(const std::string& p) const {
    return peek().kind == Token::Kind::Punct && peek().text == p;
  }
  bool eat_punct(const std::string& p) {
    if (!at_punct(p)) return false;
    ++pos_;
    return true;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, peek().offset);
  }
  void expect_punct(const std::string& p) {
    if (!eat_punct(p)) fail("expected '" + p + "'");
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("unexpected trailing input");
  }

  bool at_ident(const std::string& w) const {
    return peek().kind == Token::Kind::Ident && peek().text == w;
  }

  std::string ident() {
    if (peek().kind != Token::Kind::Ident) fail("expected identifier");
    if (is_keyword(peek().text)) fail("keyword '" + peek().text + "' used as identifier");
    return next().text;
  }

  int small_number(const char* what) {
    if (peek().kind != Token::Kind::Number) fail(std::string("expected ") + what);
    long v = std::stol(next().text);
    return static_cast<int>(v);
  }

  // --- terms ---

  TermPtr term() {
    TermPtr t = term_mul();
    while (at_punct("+")) {
      ++pos_;
      t = tm::add(t, term_mul());
    }
    return t;
  }

  TermPtr term_mul() {
    TermPtr t = term_primary();
    while (at_punct("*")) {
      ++pos_;
      t = tm::mul(t, term_primary());
    }
    return t;
  }

  TermPtr fn_args1(const char* name) {
    expect_punct("(");
    TermPtr a = term();
    expect_punct(")");
    (void)name;
    return a;
  }

  TermPtr term_primary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Number) {
      ++pos_;
      Nat n(t.text);
      return numeral(n);
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text == "exp") {
        ++pos_;
        return tm::exp(fn_args1("exp"));
      }
      if (t.text == "neg") {
        ++pos_;
        return tm::not_code(fn_args1("neg"));
      }
      if (t.text == "sub") {
        ++pos_;
        expect_punct("(");
        TermPtr a = term();
        expect_punct(",");
        TermPtr b = term();
        expect_punct(",");
        TermPtr c = term();
        expect_punct(")");
        return tm::sub(a, b, c);
      }
      if (t.text == "imp" || t.text == "all") {
        bool is_imp = t.text == "imp";
        ++pos_;
        expect_punct("(");
        TermPtr a = term();
        expect_punct(",");
        TermPtr b = term();
        expect_punct(")");
        return is_imp ? tm::imp_code(a, b) : tm::all_code(a, b);
      }
      return tm::var(ident());
    }
    if (at_punct("(")) {
      ++pos_;
      TermPtr inner = term();
      expect_punct(")");
      return inner;
    }
    fail("expected term");
  }

  // --- formulas ---

  FormulaPtr formula() { return formula_implies(); }

  FormulaPtr formula_implies() {
    FormulaPtr l = formula_or();
    if (eat_punct("->")) return fm::implies(l, formula_implies());
    return l;
  }

  FormulaPtr formula_or() {
    FormulaPtr l = formula_and();
    while (eat_punct("|")) l = fm::lor(l, formula_and());
    return l;
  }

  FormulaPtr formula_and() {
    FormulaPtr l = formula_unary();
    while (eat_punct("&")) l = fm::land(l, formula_unary());
    return l;
  }

  FormulaPtr formula_unary() {
    if (eat_punct("~")) return fm::lnot(formula_unary());
    if (at_ident("E") || at_ident("A")) {
      bool ex = peek().text == "E";
      ++pos_;
      std::string v = ident();
      TermPtr bound;
      if (eat_punct("<")) bound = term();
      expect_punct(".");
      FormulaPtr body = formula_implies();
      if (bound) return ex ? fm::bexists(v, bound, body) : fm::bforall(v, bound, body);
      return ex ? fm::exists(v, body) : fm::forall(v, body);
    }
    return formula_atom();
  }

  FormulaPtr formula_atom() {
    if (at_ident("TrueN")) {
      ++pos_;
      if (peek().kind != Token::Kind::BracketName) fail("expected [level]");
      std::string lv = next().text;
      for (char c : lv)
        if (!std::isdigit(static_cast<unsigned char>(c))) fail("bad TrueN level");
      if (lv.empty()) fail("bad TrueN level");
      expect_punct("(");
      TermPtr a = term();
      expect_punct(")");
      return fm::true_n(std::stoi(lv), a);
    }
    if (at_ident("Proof") || at_ident("OProof")) {
      bool oracle = peek().text == "OProof";
      ++pos_;
      if (peek().kind != Token::Kind::BracketName) fail("expected [theory]");
      std::string nm = next().text;
      int level = -1;
      if (oracle) {
        size_t semi = nm.rfind(';');
        if (semi == std::string::npos) fail("OProof needs [theory;level]");
        level = std::stoi(nm.substr(semi + 1));
        nm = nm.substr(0, semi);
      }
      expect_punct("(");
      TermPtr p = term();
      expect_punct(",");
      TermPtr f = term();
      expect_punct(")");
      return oracle ? fm::oracle_proof_p(nm, level, p, f) : fm::proof_p(nm, p, f);
    }
    if (at_punct("(")) {
      // Either a parenthesized formula or a parenthesized term followed by a
      // comparison; try the formula reading first and backtrack on failure.
      size_t save = pos_;
      try {
        ++pos_;
        FormulaPtr f = formula();
        expect_punct(")");
        return f;
      } catch (const ParseError&) {
        pos_ = save;
      }
    }
    TermPtr l = term();
    if (eat_punct("=")) return fm::eq(l, term());
    if (eat_punct("<")) return fm::less(l, term());
    fail("expected '=' or '<'");
  }
};

}  // namespace

ParseResult parse_formula(const std::string& text) {
  std::string norm = normalize_unicode(text);
  Lexer lex(norm);
  Parser p(lex.tokens());
  ParseResult r;
  r.ast = p.formula_all();
  for (const auto& v : free_vars(r.ast)) r.warnings.push_back("unbound variable: " + v);
  return r;
}

TermPtr parse_term(const std::string& text) {
  std::string norm = normalize_unicode(text);
  Lexer lex(norm);
  Parser p(lex.tokens());
  return p.term_all();
}

}  // namespace fgh
