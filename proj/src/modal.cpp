#include "fgh/modal.hpp"

#include <cctype>
#include <functional>
#include <sstream>

namespace fgh {

namespace {
MPtr mk(ModalFormula::Kind k, std::string n, int lv, std::vector<MPtr> ks) {
  return std::make_shared<ModalFormula>(k, std::move(n), lv, std::move(ks));
}
}  // namespace

namespace md {

MPtr atom(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("atom name must be nonempty");
  return mk(ModalFormula::Kind::Atom, name, -1, {});
}
MPtr bot() {
  static const MPtr b = mk(ModalFormula::Kind::Bot, "", -1, {});
  return b;
}
MPtr top() { return mnot(bot()); }
MPtr mnot(MPtr a) { return mk(ModalFormula::Kind::Not, "", -1, {std::move(a)}); }
MPtr mand(MPtr a, MPtr b) {
  return mk(ModalFormula::Kind::And, "", -1, {std::move(a), std::move(b)});
}
MPtr mor(MPtr a, MPtr b) {
  return mk(ModalFormula::Kind::Or, "", -1, {std::move(a), std::move(b)});
}
MPtr mimplies(MPtr a, MPtr b) {
  return mk(ModalFormula::Kind::Implies, "", -1, {std::move(a), std::move(b)});
}
MPtr box(int level, MPtr a) {
  if (level < 0) throw std::invalid_argument("box level must be >= 0");
  return mk(ModalFormula::Kind::Box, "", level, {std::move(a)});
}
MPtr dia(int level, MPtr a) { return mnot(box(level, mnot(std::move(a)))); }

}  // namespace md

bool modal_equal(const MPtr& a, const MPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind || a->name != b->name || a->level != b->level) return false;
  if (a->kids.size() != b->kids.size()) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!modal_equal(a->kids[i], b->kids[i])) return false;
  return true;
}

std::set<std::string> modal_atoms(const MPtr& f) {
  std::set<std::string> out;
  std::function<void(const MPtr&)> go = [&](const MPtr& g) {
    if (g->kind == ModalFormula::Kind::Atom) out.insert(g->name);
    for (const auto& k : g->kids) go(k);
  };
  go(f);
  return out;
}

std::set<int> modal_levels(const MPtr& f) {
  std::set<int> out;
  std::function<void(const MPtr&)> go = [&](const MPtr& g) {
    if (g->kind == ModalFormula::Kind::Box) out.insert(g->level);
    for (const auto& k : g->kids) go(k);
  };
  go(f);
  return out;
}

MPtr modal_substitute(const MPtr& f, const std::string& atom, const MPtr& g) {
  if (f->kind == ModalFormula::Kind::Atom) return f->name == atom ? g : f;
  if (f->kids.empty()) return f;
  std::vector<MPtr> kids;
  kids.reserve(f->kids.size());
  bool changed = false;
  for (const auto& k : f->kids) {
    MPtr nk = modal_substitute(k, atom, g);
    changed = changed || nk.get() != k.get();
    kids.push_back(std::move(nk));
  }
  if (!changed) return f;
  return mk(f->kind, f->name, f->level, std::move(kids));
}

namespace {

void render_rec(std::ostringstream& os, const MPtr& f, bool top) {
  auto wrap = [&](auto emit) {
    if (!top) os << "(";
    emit();
    if (!top) os << ")";
  };
  switch (f->kind) {
    case ModalFormula::Kind::Atom: os << f->name; return;
    case ModalFormula::Kind::Bot: os << "F"; return;
    case ModalFormula::Kind::Not:
      wrap([&] {
        os << "~";
        render_rec(os, f->kids[0], false);
      });
      return;
    case ModalFormula::Kind::Box:
      wrap([&] {
        os << "[" << f->level << "]";
        render_rec(os, f->kids[0], false);
      });
      return;
    case ModalFormula::Kind::And:
    case ModalFormula::Kind::Or:
    case ModalFormula::Kind::Implies: {
      const char* op = f->kind == ModalFormula::Kind::And   ? " & "
                       : f->kind == ModalFormula::Kind::Or ? " | "
                                                           : " -> ";
      wrap([&] {
        render_rec(os, f->kids[0], false);
        os << op;
        render_rec(os, f->kids[1], false);
      });
      return;
    }
  }
}

class MParser {
 public:
  explicit MParser(const std::string& s) : s_(s) {}

  MPtr all() {
    MPtr f = implies();
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& w) const { throw ParseError(w, pos_); }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool eat_arrow() {
    skip();
    if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '>') {
      pos_ += 2;
      return true;
    }
    return false;
  }
  int number() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected level");
    return std::stoi(s_.substr(start, pos_ - start));
  }

  MPtr implies() {
    MPtr l = disj();
    if (eat_arrow()) return md::mimplies(l, implies());
    return l;
  }
  MPtr disj() {
    MPtr l = conj();
    while (eat('|')) l = md::mor(l, conj());
    return l;
  }
  MPtr conj() {
    MPtr l = unary();
    while (eat('&')) l = md::mand(l, unary());
    return l;
  }
  MPtr unary() {
    skip();
    if (eat('~')) return md::mnot(unary());
    if (eat('[')) {
      int n = number();
      if (!eat(']')) fail("expected ']'");
      return md::box(n, unary());
    }
    if (eat('<')) {
      int n = number();
      if (!eat('>')) fail("expected '>'");
      return md::dia(n, unary());
    }
    return atom();
  }
  MPtr atom() {
    skip();
    if (eat('(')) {
      MPtr f = implies();
      if (!eat(')')) fail("expected ')'");
      return f;
    }
    if (pos_ >= s_.size()) fail("expected modal formula");
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                s_[pos_] == '_' || s_[pos_] == '\''))
      ++pos_;
    if (pos_ == start) fail("expected modal formula");
    std::string word = s_.substr(start, pos_ - start);
    if (word == "F") return md::bot();
    if (word == "T") return md::top();
    return md::atom(word);
  }
};

}  // namespace

std::string render_modal(const MPtr& f) {
  std::ostringstream os;
  render_rec(os, f, true);
  return os.str();
}

MPtr parse_modal(const std::string& text) { return MParser(text).all(); }

}  // namespace fgh
