#include "fgh/hierarchy.hpp"

#include <algorithm>

#include "fgh/printer.hpp"

namespace fgh {

namespace {

constexpr int kInf = 1 << 28;

// Least levels at which a (sub)formula, read in the given polarity, lands in
// each family. kInf marks "not derivable at any level".
struct Levels {
  int sigma = kInf;   // Sigma(sigma)
  int pi = kInf;      // Pi(pi)
  int sigma_b = kInf; // SigmaB(sigma_b)
  int sigma1 = kInf;  // Sigma1Class(sigma1)
  int bang = kInf;    // SigmaBang(bang)
};

int add1(int n) { return n >= kInf ? kInf : n + 1; }

Levels atom_levels(const FormulaPtr& f, bool positive) {
  Levels l;
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::ProofP:
      // Delta0 either way; Proof is a standard Delta0 formalization.
      l.sigma = 0;
      l.pi = 0;
      l.sigma_b = 1;
      l.sigma1 = 1;
      return l;
    case Formula::Kind::TrueN: {
      int k = f->level;  // partial truth for level-k sentences is Sigma(k)-complete
      if (positive) {
        l.sigma = k;
        l.pi = k + 1;
        l.sigma_b = k;
        l.sigma1 = k;
      } else {
        l.pi = k;
        l.sigma = k + 1;
        l.sigma_b = k + 1;
        l.sigma1 = k + 1;
      }
      return l;
    }
    case Formula::Kind::OracleProofP: {
      // "p is a proof from true level-(n+1) oracle sentences" is a bounded
      // conjunction of Delta0 checks and level-(n+1) truths: SigmaB(n+1).
      // The same fiat level is used for the negative literal so that
      // witness-comparison statements over oracle boxes keep the level-(n+1)
      // bookkeeping (Lemma-2-item-11 style closure).
      int k = f->level + 1;
      l.sigma_b = k;
      l.sigma1 = k;
      return l;
    }
    default:
      throw std::logic_error("atom_levels on non-atom");
  }
}

Levels levels(const FormulaPtr& f, bool positive) {
  switch (f->kind) {
    case Formula::Kind::Less:
    case Formula::Kind::Eq:
    case Formula::Kind::TrueN:
    case Formula::Kind::ProofP:
    case Formula::Kind::OracleProofP:
      return atom_levels(f, positive);
    case Formula::Kind::Not:
      return levels(f->subs[0], !positive);
    case Formula::Kind::Implies: {
      Levels a = levels(f->subs[0], !positive);
      Levels b = levels(f->subs[1], positive);
      Levels l;
      l.sigma = std::max(a.sigma, b.sigma);
      l.pi = std::max(a.pi, b.pi);
      l.sigma_b = std::max(a.sigma_b, b.sigma_b);
      l.sigma1 = std::max(a.sigma1, b.sigma1);
      return l;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      Levels a = levels(f->subs[0], positive);
      Levels b = levels(f->subs[1], positive);
      Levels l;
      l.sigma = std::max(a.sigma, b.sigma);
      l.pi = std::max(a.pi, b.pi);
      l.sigma_b = std::max(a.sigma_b, b.sigma_b);
      l.sigma1 = std::max(a.sigma1, b.sigma1);
      return l;
    }
    case Formula::Kind::Exists:
    case Formula::Kind::Forall: {
      bool existential = (f->kind == Formula::Kind::Exists) == positive;
      Levels b = levels(f->subs[0], positive);
      Levels l;
      if (existential) {
        l.sigma = b.sigma >= kInf ? kInf : std::max(b.sigma, 1);
        l.pi = add1(l.sigma);
        l.sigma_b = l.sigma;
        l.sigma1 = b.sigma1;  // single-prefix shape and the E-prefix closure
        l.bang = add1(b.pi);  // E x over a Pi(n) matrix
      } else {
        l.pi = b.pi >= kInf ? kInf : std::max(b.pi, 1);
        l.sigma = add1(l.pi);
        l.sigma_b = l.sigma;
        l.sigma1 = l.sigma;
      }
      return l;
    }
    case Formula::Kind::BForall:
    case Formula::Kind::BExists: {
      bool existential = (f->kind == Formula::Kind::BExists) == positive;
      Levels b = levels(f->subs[0], positive);
      Levels l;
      if (b.sigma == 0) {  // Delta0 body stays Delta0
        l.sigma = 0;
        l.pi = 0;
        l.sigma_b = 1;
        l.sigma1 = 1;
        return l;
      }
      l.sigma_b = b.sigma_b;
      // Bounded existentials commute with the leading unbounded block;
      // bounded universals over a proper Sigma1Class body would need
      // collection and are therefore not admitted.
      l.sigma1 = existential ? b.sigma1 : b.sigma_b;
      return l;
    }
  }
  throw std::logic_error("unreachable");
}

int kind_rank(FormulaClass::Kind k) {
  switch (k) {
    case FormulaClass::Kind::Delta0: return 0;
    case FormulaClass::Kind::Sigma: return 1;
    case FormulaClass::Kind::Pi: return 2;
    case FormulaClass::Kind::SigmaB: return 3;
    case FormulaClass::Kind::Sigma1Class: return 4;
    case FormulaClass::Kind::SigmaBang: return 5;
  }
  return 6;
}

}  // namespace

std::string to_string(const FormulaClass& c) {
  switch (c.kind) {
    case FormulaClass::Kind::Delta0: return "Delta0";
    case FormulaClass::Kind::Sigma: return "Sigma(" + std::to_string(c.level) + ")";
    case FormulaClass::Kind::Pi: return "Pi(" + std::to_string(c.level) + ")";
    case FormulaClass::Kind::SigmaBang: return "SigmaBang(" + std::to_string(c.level) + ")";
    case FormulaClass::Kind::SigmaB: return "SigmaB(" + std::to_string(c.level) + ")";
    case FormulaClass::Kind::Sigma1Class:
      return "Sigma1Class(" + std::to_string(c.level) + ")";
  }
  return "?";
}

bool class_le(const FormulaClass& a, const FormulaClass& b) {
  using K = FormulaClass::Kind;
  if (a == b) return true;
  switch (a.kind) {
    case K::Delta0:
      return b.kind != K::SigmaBang;  // Delta0 lacks the existential prefix
    case K::SigmaBang:
      switch (b.kind) {
        case K::SigmaBang:
        case K::Sigma:
        case K::SigmaB:
        case K::Sigma1Class: return a.level <= b.level;
        case K::Pi: return a.level < b.level;
        default: return false;
      }
    case K::Sigma:
      switch (b.kind) {
        case K::Sigma:
        case K::SigmaB:
        case K::Sigma1Class: return a.level <= b.level;
        case K::Pi: return a.level < b.level;
        default: return false;
      }
    case K::Pi:
      switch (b.kind) {
        case K::Pi: return a.level <= b.level;
        case K::Sigma:
        case K::SigmaB:
        case K::Sigma1Class: return a.level < b.level;
        default: return false;
      }
    case K::SigmaB:
      switch (b.kind) {
        case K::SigmaB:
        case K::Sigma1Class: return a.level <= b.level;
        default: return false;
      }
    case K::Sigma1Class:
      return b.kind == K::Sigma1Class && a.level <= b.level;
  }
  return false;
}

bool is_in_class(const FormulaPtr& f, const FormulaClass& c) {
  Levels l = levels(f, true);
  switch (c.kind) {
    case FormulaClass::Kind::Delta0: return l.sigma == 0;
    case FormulaClass::Kind::Sigma: return l.sigma <= c.level;
    case FormulaClass::Kind::Pi: return l.pi <= c.level;
    case FormulaClass::Kind::SigmaBang: return l.bang <= c.level;
    case FormulaClass::Kind::SigmaB: return l.sigma_b <= c.level;
    case FormulaClass::Kind::Sigma1Class: return l.sigma1 <= c.level;
  }
  return false;
}

FormulaClass classify(const FormulaPtr& f) {
  Levels l = levels(f, true);
  if (l.sigma == 0) return FormulaClass::delta0();
  std::vector<FormulaClass> cand;
  if (l.sigma < kInf) cand.push_back(FormulaClass::sigma(l.sigma));
  if (l.pi < kInf) cand.push_back(FormulaClass::pi(l.pi));
  if (l.sigma_b < kInf) cand.push_back(FormulaClass::sigma_b(l.sigma_b));
  if (l.sigma1 < kInf) cand.push_back(FormulaClass::sigma1(l.sigma1));
  if (cand.empty())
    throw ClassifyError("no hierarchy class derivable for: " + render(f));
  std::vector<FormulaClass> minimal;
  for (const auto& c : cand) {
    bool dominated = false;
    for (const auto& d : cand)
      if (!(d == c) && class_le(d, c)) dominated = true;
    if (!dominated) minimal.push_back(c);
  }
  return *std::min_element(minimal.begin(), minimal.end(),
                           [](const FormulaClass& x, const FormulaClass& y) {
                             return kind_rank(x.kind) < kind_rank(y.kind);
                           });
}

std::vector<FormulaClass> memberships(const FormulaPtr& f) {
  Levels l = levels(f, true);
  std::vector<FormulaClass> out;
  if (l.sigma == 0) out.push_back(FormulaClass::delta0());
  if (l.bang < kInf) out.push_back(FormulaClass::sigma_bang(l.bang));
  if (l.sigma < kInf && l.sigma > 0) out.push_back(FormulaClass::sigma(l.sigma));
  if (l.pi < kInf && l.pi > 0) out.push_back(FormulaClass::pi(l.pi));
  if (l.sigma_b < kInf) out.push_back(FormulaClass::sigma_b(l.sigma_b));
  if (l.sigma1 < kInf) out.push_back(FormulaClass::sigma1(l.sigma1));
  return out;
}

}  // namespace fgh
