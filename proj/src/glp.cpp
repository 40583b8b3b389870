#include "fgh/glp.hpp"

#include <algorithm>
#include <functional>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "fgh/boxes.hpp"
#include "fgh/coding.hpp"

namespace fgh {

using MK = ModalFormula::Kind;

ModalProofLine ModalProofLine::taut(MPtr f) { return {Kind::Taut, std::move(f)}; }
ModalProofLine ModalProofLine::ax_k(MPtr f) { return {Kind::AxK, std::move(f)}; }
ModalProofLine ModalProofLine::ax_lob(MPtr f) { return {Kind::AxLob, std::move(f)}; }
ModalProofLine ModalProofLine::ax_mono(MPtr f) { return {Kind::AxMono, std::move(f)}; }
ModalProofLine ModalProofLine::ax_negintro(MPtr f) {
  return {Kind::AxNegIntro, std::move(f)};
}
ModalProofLine ModalProofLine::mp(MPtr f, int premise, int implication) {
  ModalProofLine l{Kind::MP, std::move(f)};
  l.ref1 = premise;
  l.ref2 = implication;
  return l;
}
ModalProofLine ModalProofLine::nec(MPtr f, int src, int level) {
  ModalProofLine l{Kind::Nec, std::move(f)};
  l.ref1 = src;
  l.level = level;
  return l;
}

namespace {

// ---- schema matchers ----

// [n](A -> B) -> ([n]A -> [n]B)
bool match_k(const MPtr& f) {
  if (f->kind != MK::Implies) return false;
  const MPtr& l = f->kids[0];
  const MPtr& r = f->kids[1];
  if (l->kind != MK::Box || l->kids[0]->kind != MK::Implies) return false;
  if (r->kind != MK::Implies) return false;
  const MPtr& ra = r->kids[0];
  const MPtr& rb = r->kids[1];
  if (ra->kind != MK::Box || rb->kind != MK::Box) return false;
  int n = l->level;
  if (ra->level != n || rb->level != n) return false;
  return modal_equal(ra->kids[0], l->kids[0]->kids[0]) &&
         modal_equal(rb->kids[0], l->kids[0]->kids[1]);
}

// [n]([n]A -> A) -> [n]A
bool match_lob(const MPtr& f) {
  if (f->kind != MK::Implies) return false;
  const MPtr& l = f->kids[0];
  const MPtr& r = f->kids[1];
  if (l->kind != MK::Box || r->kind != MK::Box || l->level != r->level) return false;
  const MPtr& inner = l->kids[0];
  if (inner->kind != MK::Implies) return false;
  const MPtr& ba = inner->kids[0];
  if (ba->kind != MK::Box || ba->level != l->level) return false;
  return modal_equal(ba->kids[0], inner->kids[1]) && modal_equal(r, ba);
}

// [n]A -> [n+1]A
bool match_mono(const MPtr& f) {
  if (f->kind != MK::Implies) return false;
  const MPtr& l = f->kids[0];
  const MPtr& r = f->kids[1];
  if (l->kind != MK::Box || r->kind != MK::Box) return false;
  if (r->level != l->level + 1) return false;
  return modal_equal(l->kids[0], r->kids[0]);
}

// <n>A -> [n+1]<n>A with <n>A spelled ~[n]~A
bool match_negintro(const MPtr& f) {
  if (f->kind != MK::Implies) return false;
  const MPtr& d = f->kids[0];
  const MPtr& r = f->kids[1];
  if (d->kind != MK::Not || d->kids[0]->kind != MK::Box ||
      d->kids[0]->kids[0]->kind != MK::Not)
    return false;
  int n = d->kids[0]->level;
  return r->kind == MK::Box && r->level == n + 1 && modal_equal(r->kids[0], d);
}

// ---- propositional skeleton ----

struct MSkel {
  int op;  // 0 atom, 1 not, 2 and, 3 or, 4 implies, 5 bot
  int atom = -1;
  std::unique_ptr<MSkel> l, r;
};

std::unique_ptr<MSkel> build_mskel(const MPtr& f, std::vector<MPtr>& atoms) {
  auto s = std::make_unique<MSkel>();
  switch (f->kind) {
    case MK::Bot: s->op = 5; return s;
    case MK::Not:
      s->op = 1;
      s->l = build_mskel(f->kids[0], atoms);
      return s;
    case MK::And:
    case MK::Or:
    case MK::Implies:
      s->op = f->kind == MK::And ? 2 : f->kind == MK::Or ? 3 : 4;
      s->l = build_mskel(f->kids[0], atoms);
      s->r = build_mskel(f->kids[1], atoms);
      return s;
    default:
      s->op = 0;
      for (size_t i = 0; i < atoms.size(); ++i)
        if (modal_equal(atoms[i], f)) {
          s->atom = static_cast<int>(i);
          return s;
        }
      atoms.push_back(f);
      s->atom = static_cast<int>(atoms.size()) - 1;
      return s;
  }
}

bool mskel_eval(const MSkel& s, uint32_t a) {
  switch (s.op) {
    case 0: return (a >> s.atom) & 1;
    case 1: return !mskel_eval(*s.l, a);
    case 2: return mskel_eval(*s.l, a) && mskel_eval(*s.r, a);
    case 3: return mskel_eval(*s.l, a) || mskel_eval(*s.r, a);
    case 4: return !mskel_eval(*s.l, a) || mskel_eval(*s.r, a);
    default: return false;  // bot
  }
}

bool modal_tautology(const MPtr& f) {
  std::vector<MPtr> atoms;
  auto s = build_mskel(f, atoms);
  if (atoms.size() > 20) return false;
  for (uint32_t a = 0; a < (1u << atoms.size()); ++a)
    if (!mskel_eval(*s, a)) return false;
  return true;
}

}  // namespace

ModalCheckReport glp_check_proof(const ModalProof& p) {
  ModalCheckReport rep;
  if (p.lines.empty()) {
    rep.diagnostics.push_back("empty proof");
    return rep;
  }
  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ModalProofLine& ln = p.lines[i];
    auto bad = [&](const std::string& why) {
      rep.diagnostics.push_back("line " + std::to_string(i) + ": " + why);
    };
    if (!ln.formula) {
      bad("missing formula");
      continue;
    }
    switch (ln.kind) {
      case ModalProofLine::Kind::Taut:
        if (!modal_tautology(ln.formula)) bad("not a propositional tautology");
        break;
      case ModalProofLine::Kind::AxK:
        if (!match_k(ln.formula)) bad("not a K-axiom instance");
        break;
      case ModalProofLine::Kind::AxLob:
        if (!match_lob(ln.formula)) bad("not a Loeb-axiom instance");
        break;
      case ModalProofLine::Kind::AxMono:
        if (!match_mono(ln.formula)) bad("not a monotonicity instance");
        break;
      case ModalProofLine::Kind::AxNegIntro:
        if (!match_negintro(ln.formula)) bad("not a negative-introspection instance");
        break;
      case ModalProofLine::Kind::MP: {
        if (ln.ref1 < 0 || ln.ref2 < 0 || static_cast<size_t>(ln.ref1) >= i ||
            static_cast<size_t>(ln.ref2) >= i) {
          bad("MP references out of range");
          break;
        }
        const MPtr& prem = p.lines[ln.ref1].formula;
        const MPtr& impl = p.lines[ln.ref2].formula;
        if (impl->kind != MK::Implies || !modal_equal(impl->kids[0], prem) ||
            !modal_equal(impl->kids[1], ln.formula))
          bad("MP does not match its premises");
        break;
      }
      case ModalProofLine::Kind::Nec: {
        if (ln.ref1 < 0 || static_cast<size_t>(ln.ref1) >= i) {
          bad("Nec reference out of range");
          break;
        }
        if (ln.formula->kind != MK::Box || ln.formula->level != ln.level ||
            !modal_equal(ln.formula->kids[0], p.lines[ln.ref1].formula))
          bad("Nec does not box its source line");
        break;
      }
    }
  }
  rep.ok = rep.diagnostics.empty();
  return rep;
}

namespace {

const char* mkind_name(ModalProofLine::Kind k) {
  switch (k) {
    case ModalProofLine::Kind::Taut: return "taut";
    case ModalProofLine::Kind::AxK: return "k";
    case ModalProofLine::Kind::AxLob: return "lob";
    case ModalProofLine::Kind::AxMono: return "mono";
    case ModalProofLine::Kind::AxNegIntro: return "negintro";
    case ModalProofLine::Kind::MP: return "mp";
    case ModalProofLine::Kind::Nec: return "nec";
  }
  return "?";
}

}  // namespace

std::string modal_proof_to_jsonl(const ModalProof& p) {
  std::ostringstream os;
  for (const auto& ln : p.lines) {
    nlohmann::json j;
    j["kind"] = mkind_name(ln.kind);
    j["formula"] = render_modal(ln.formula);
    std::vector<int> refs;
    if (ln.ref1 >= 0) refs.push_back(ln.ref1);
    if (ln.ref2 >= 0) refs.push_back(ln.ref2);
    j["refs"] = refs;
    if (ln.level >= 0) j["level"] = ln.level;
    os << j.dump() << "\n";
  }
  return os.str();
}

ModalProof modal_proof_from_jsonl(const std::string& text) {
  ModalProof p;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError("modal proof line " + std::to_string(lineno) + ": " + e.what(), 0);
    }
    std::string kind = j.at("kind").get<std::string>();
    MPtr f = parse_modal(j.at("formula").get<std::string>());
    std::vector<int> refs;
    if (j.contains("refs")) refs = j["refs"].get<std::vector<int>>();
    if (kind == "taut") p.lines.push_back(ModalProofLine::taut(f));
    else if (kind == "k") p.lines.push_back(ModalProofLine::ax_k(f));
    else if (kind == "lob") p.lines.push_back(ModalProofLine::ax_lob(f));
    else if (kind == "mono") p.lines.push_back(ModalProofLine::ax_mono(f));
    else if (kind == "negintro") p.lines.push_back(ModalProofLine::ax_negintro(f));
    else if (kind == "mp") {
      if (refs.size() != 2)
        throw ParseError("modal proof line " + std::to_string(lineno) + ": mp needs two refs", 0);
      p.lines.push_back(ModalProofLine::mp(f, refs[0], refs[1]));
    } else if (kind == "nec") {
      if (refs.size() != 1)
        throw ParseError("modal proof line " + std::to_string(lineno) + ": nec needs one ref", 0);
      p.lines.push_back(ModalProofLine::nec(f, refs[0], j.at("level").get<int>()));
    } else {
      throw ParseError("modal proof line " + std::to_string(lineno) + ": unknown kind " + kind, 0);
    }
  }
  return p;
}

// ---- Kripke models ----

bool model_is_transitive_irreflexive(const KripkeModel& m) {
  std::vector<std::vector<bool>> r(m.worlds, std::vector<bool>(m.worlds, false));
  for (auto [a, b] : m.edges) {
    if (a < 0 || b < 0 || a >= m.worlds || b >= m.worlds) return false;
    r[a][b] = true;
  }
  for (int i = 0; i < m.worlds; ++i)
    if (r[i][i]) return false;
  for (int i = 0; i < m.worlds; ++i)
    for (int j = 0; j < m.worlds; ++j)
      for (int k = 0; k < m.worlds; ++k)
        if (r[i][j] && r[j][k] && !r[i][k]) return false;
  return true;
}

bool model_check(const KripkeModel& m, int world, const MPtr& f) {
  switch (f->kind) {
    case MK::Atom: {
      auto it = m.valuation.find(f->name);
      return it != m.valuation.end() && it->second.count(world) > 0;
    }
    case MK::Bot: return false;
    case MK::Not: return !model_check(m, world, f->kids[0]);
    case MK::And:
      return model_check(m, world, f->kids[0]) && model_check(m, world, f->kids[1]);
    case MK::Or:
      return model_check(m, world, f->kids[0]) || model_check(m, world, f->kids[1]);
    case MK::Implies:
      return !model_check(m, world, f->kids[0]) || model_check(m, world, f->kids[1]);
    case MK::Box:
      for (auto [a, b] : m.edges)
        if (a == world && !model_check(m, b, f->kids[0])) return false;
      return true;
  }
  return false;
}

namespace {

using Signed = std::pair<MPtr, bool>;

// Tableau satisfiability for one GL world. Returns a model whose world 0
// satisfies every signed formula, or nullopt.
std::optional<KripkeModel> sat(std::vector<Signed> items) {
  // Propositional expansion; branch points recurse.
  for (size_t i = 0; i < items.size(); ++i) {
    auto [f, sign] = items[i];
    auto rest_with = [&](std::initializer_list<Signed> repl) {
      std::vector<Signed> out;
      out.reserve(items.size() + 1);
      for (size_t j = 0; j < items.size(); ++j)
        if (j != i) out.push_back(items[j]);
      for (const auto& s : repl) out.push_back(s);
      return out;
    };
    switch (f->kind) {
      case MK::Not:
        return sat(rest_with({{f->kids[0], !sign}}));
      case MK::And:
        if (sign) return sat(rest_with({{f->kids[0], true}, {f->kids[1], true}}));
        if (auto m = sat(rest_with({{f->kids[0], false}}))) return m;
        return sat(rest_with({{f->kids[1], false}}));
      case MK::Or:
        if (!sign) return sat(rest_with({{f->kids[0], false}, {f->kids[1], false}}));
        if (auto m = sat(rest_with({{f->kids[0], true}}))) return m;
        return sat(rest_with({{f->kids[1], true}}));
      case MK::Implies:
        if (!sign) return sat(rest_with({{f->kids[0], true}, {f->kids[1], false}}));
        if (auto m = sat(rest_with({{f->kids[0], false}}))) return m;
        return sat(rest_with({{f->kids[1], true}}));
      case MK::Bot:
        if (sign) return std::nullopt;
        return sat(rest_with({}));
      default:
        break;  // literal or box; leave in place
    }
  }

  std::map<std::string, bool> literals;
  std::vector<MPtr> boxes_true, boxes_false;
  for (const auto& [f, sign] : items) {
    if (f->kind == MK::Atom) {
      auto it = literals.find(f->name);
      if (it != literals.end() && it->second != sign) return std::nullopt;
      literals[f->name] = sign;
    } else if (f->kind == MK::Box) {
      (sign ? boxes_true : boxes_false).push_back(f);
    }
  }

  KripkeModel m;
  m.worlds = 1;
  for (const auto& [name, val] : literals)
    if (val) m.valuation[name].insert(0);

  for (const MPtr& bf : boxes_false) {
    // Last-failure successor: the failing world also asserts the box itself,
    // which is what bounds the recursion in GL.
    std::vector<Signed> child;
    child.push_back({bf->kids[0], false});
    child.push_back({bf, true});
    for (const MPtr& bt : boxes_true) {
      child.push_back({bt->kids[0], true});
      child.push_back({bt, true});
    }
    auto cm = sat(std::move(child));
    if (!cm) return std::nullopt;
    int off = m.worlds;
    m.worlds += cm->worlds;
    for (auto [a, b] : cm->edges) m.edges.push_back({a + off, b + off});
    for (const auto& [name, ws] : cm->valuation)
      for (int w : ws) m.valuation[name].insert(w + off);
    for (int w = 0; w < cm->worlds; ++w) m.edges.push_back({0, w + off});
  }
  return m;
}

}  // namespace

GLDecision gl_decide(const MPtr& f) {
  if (modal_levels(f).size() > 1)
    throw ShapeError("gl_decide handles a single modality level only");
  GLDecision d;
  auto m = sat({{f, false}});
  if (!m) {
    d.valid = true;
    return d;
  }
  d.valid = false;
  d.countermodel = std::move(*m);
  return d;
}

std::vector<KripkeModel> enumerate_strict_poset_frames(int max_worlds) {
  std::vector<KripkeModel> out;
  for (int n = 0; n <= max_worlds; ++n) {
    int pairs = n * (n - 1);
    // Enumerate relations as bitmasks over ordered pairs (i, j), i != j.
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) slots.push_back({i, j});
    std::vector<std::vector<uint64_t>> canon_seen;
    for (uint64_t mask = 0; mask < (1ull << pairs); ++mask) {
      std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
      for (int s = 0; s < pairs; ++s)
        if (mask & (1ull << s)) r[slots[s].first][slots[s].second] = true;
      bool ok = true;
      for (int i = 0; i < n && ok; ++i)
        for (int j = 0; j < n && ok; ++j)
          for (int k = 0; k < n && ok; ++k)
            if (r[i][j] && r[j][k] && !r[i][k]) ok = false;
      if (!ok) continue;
      // Canonical form under vertex permutations.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      uint64_t best = ~0ull;
      do {
        uint64_t code = 0;
        int bit = 0;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (r[perm[i]][perm[j]]) code |= 1ull << bit;
            ++bit;
          }
        best = std::min(best, code);
      } while (std::next_permutation(perm.begin(), perm.end()));
      bool dup = false;
      for (const auto& c : canon_seen)
        if (c[0] == static_cast<uint64_t>(n) && c[1] == best) dup = true;
      if (dup) continue;
      canon_seen.push_back({static_cast<uint64_t>(n), best});
      KripkeModel m;
      m.worlds = n;
      for (int s = 0; s < pairs; ++s)
        if (mask & (1ull << s)) m.edges.push_back(slots[s]);
      out.push_back(std::move(m));
    }
  }
  return out;
}

FormulaPtr realize(const MPtr& f, const TheorySpec& theory,
                   const std::map<std::string, FormulaPtr>& assignment) {
  switch (f->kind) {
    case MK::Atom: {
      auto it = assignment.find(f->name);
      if (it == assignment.end())
        throw ShapeError("realize: no assignment for atom " + f->name);
      if (!is_sentence(it->second))
        throw ShapeError("realize: assignment for " + f->name + " is not closed");
      return it->second;
    }
    case MK::Bot: return fm::eq(tm::zero(), tm::one());
    case MK::Not: return fm::lnot(realize(f->kids[0], theory, assignment));
    case MK::And:
      return fm::land(realize(f->kids[0], theory, assignment),
                      realize(f->kids[1], theory, assignment));
    case MK::Or:
      return fm::lor(realize(f->kids[0], theory, assignment),
                     realize(f->kids[1], theory, assignment));
    case MK::Implies:
      return fm::implies(realize(f->kids[0], theory, assignment),
                         realize(f->kids[1], theory, assignment));
    case MK::Box:
      return substitute_numeral(boxbox_formula(theory, f->level), "v",
                                encode(realize(f->kids[0], theory, assignment)));
  }
  throw std::logic_error("unreachable modal kind");
}

}  // namespace fgh
