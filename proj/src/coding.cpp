#include "fgh/coding.hpp"

#include <functional>
#include <map>
#include <nlohmann/json.hpp>
#include <tuple>

#include "fgh/printer.hpp"
#include "fgh/proof.hpp"

namespace fgh {

namespace {

// Tag bytes of the frozen encoding. Terms, formulas, proofs and sequence
// codes share one tag space so a code parses as exactly one sort of object.
enum Tag : uint8_t {
  T_ZERO = 0x01, T_ONE = 0x02, T_VAR = 0x03, T_EXP = 0x04, T_ADD = 0x05,
  T_MUL = 0x06, T_SUB = 0x07, T_IMPC = 0x08, T_ALLC = 0x09, T_NOTC = 0x0A,
  F_LESS = 0x10, F_EQ = 0x11, F_TRUEN = 0x12, F_PROOF = 0x13, F_OPROOF = 0x14,
  F_NOT = 0x15, F_AND = 0x16, F_OR = 0x17, F_IMPLIES = 0x18,
  F_FORALL = 0x19, F_EXISTS = 0x1A, F_BFORALL = 0x1B, F_BEXISTS = 0x1C,
  P_PROOF = 0x20, P_AXIOM = 0x21, P_TAUT = 0x22, P_ORACLE = 0x23,
  P_MP = 0x24, P_GEN = 0x25,
  S_SEQ = 0x30,
};

struct Writer {
  std::string buf;
  void u8(uint8_t b) { buf.push_back(static_cast<char>(b)); }
  void varint(uint64_t v) {
    while (v >= 0x80) {
      u8(static_cast<uint8_t>((v & 0x7F) | 0x80));
      v >>= 7;
    }
    u8(static_cast<uint8_t>(v));
  }
  void name(const std::string& s) {
    varint(s.size());
    buf += s;
  }
  void nat(const Nat& n) {
    std::vector<uint8_t> bytes;
    if (n > 0) boost::multiprecision::export_bits(n, std::back_inserter(bytes), 8, false);
    varint(bytes.size());
    buf.append(reinterpret_cast<const char*>(bytes.data()), bytes.size());
  }
};

struct Reader {
  const std::string& buf;
  size_t pos = 0;
  explicit Reader(const std::string& b) : buf(b) {}
  [[noreturn]] void fail(const std::string& why) const {
    throw DecodeError("invalid code: " + why + " at byte " + std::to_string(pos));
  }
  uint8_t u8() {
    if (pos >= buf.size()) fail("unexpected end of stream");
    return static_cast<uint8_t>(buf[pos++]);
  }
  uint64_t varint() {
    uint64_t v = 0;
    int shift = 0;
    for (;;) {
      uint8_t b = u8();
      v |= static_cast<uint64_t>(b & 0x7F) << shift;
      if (!(b & 0x80)) return v;
      shift += 7;
      if (shift > 56) fail("varint too long");
    }
  }
  std::string name() {
    uint64_t len = varint();
    if (len > 1 << 16) fail("name too long");
    if (pos + len > buf.size()) fail("truncated name");
    std::string s = buf.substr(pos, len);
    pos += len;
    return s;
  }
  Nat nat() {
    uint64_t len = varint();
    if (pos + len > buf.size()) fail("truncated number");
    Nat n = 0;
    if (len > 0) {
      const auto* first = reinterpret_cast<const uint8_t*>(buf.data()) + pos;
      boost::multiprecision::import_bits(n, first, first + len, 8, false);
    }
    pos += len;
    return n;
  }
  void expect_done() const {
    if (pos != buf.size())
      throw DecodeError("invalid code: trailing bytes at byte " + std::to_string(pos));
  }
};

// A stream maps to the natural it spells in little-endian base 256 plus a
// sentinel high byte, so distinct streams get distinct numbers and leading
// zero bytes survive the round trip.
Nat stream_to_nat(const std::string& s) {
  std::vector<uint8_t> bytes(s.begin(), s.end());
  bytes.push_back(0x01);
  Nat n;
  boost::multiprecision::import_bits(n, bytes.begin(), bytes.end(), 8, false);
  return n;
}

std::string nat_to_stream(const Nat& g) {
  if (g <= 0) throw DecodeError("invalid code: 0 is not assigned");
  std::vector<uint8_t> bytes;
  boost::multiprecision::export_bits(g, std::back_inserter(bytes), 8, false);
  if (bytes.back() != 0x01) throw DecodeError("invalid code: bad sentinel byte");
  bytes.pop_back();
  return std::string(bytes.begin(), bytes.end());
}

void write_term(Writer& w, const TermPtr& t) {
  switch (t->kind) {
    case Term::Kind::Zero: w.u8(T_ZERO); return;
    case Term::Kind::One: w.u8(T_ONE); return;
    case Term::Kind::Var: w.u8(T_VAR); w.name(t->name); return;
    case Term::Kind::Exp: w.u8(T_EXP); break;
    case Term::Kind::Add: w.u8(T_ADD); break;
    case Term::Kind::Mul: w.u8(T_MUL); break;
    case Term::Kind::Sub: w.u8(T_SUB); break;
    case Term::Kind::ImpCode: w.u8(T_IMPC); break;
    case Term::Kind::AllCode: w.u8(T_ALLC); break;
    case Term::Kind::NotCode: w.u8(T_NOTC); break;
  }
  for (const auto& a : t->args) write_term(w, a);
}

TermPtr read_term(Reader& r) {
  uint8_t tag = r.u8();
  switch (tag) {
    case T_ZERO: return tm::zero();
    case T_ONE: return tm::one();
    case T_VAR: {
      std::string n = r.name();
      if (n.empty()) r.fail("empty variable name");
      return tm::var(n);
    }
    case T_EXP: return tm::exp(read_term(r));
    case T_ADD: {
      TermPtr l = read_term(r), rr = read_term(r);
      return tm::add(l, rr);
    }
    case T_MUL: {
      TermPtr l = read_term(r), rr = read_term(r);
      return tm::mul(l, rr);
    }
    case T_SUB: {
      TermPtr a = read_term(r), b = read_term(r), c = read_term(r);
      return tm::sub(a, b, c);
    }
    case T_IMPC: {
      TermPtr a = read_term(r), b = read_term(r);
      return tm::imp_code(a, b);
    }
    case T_ALLC: {
      TermPtr a = read_term(r), b = read_term(r);
      return tm::all_code(a, b);
    }
    case T_NOTC: return tm::not_code(read_term(r));
    default: r.fail("unknown term tag " + std::to_string(tag));
  }
}

void write_formula(Writer& w, const FormulaPtr& f) {
  switch (f->kind) {
    case Formula::Kind::Less:
      w.u8(F_LESS); write_term(w, f->terms[0]); write_term(w, f->terms[1]); return;
    case Formula::Kind::Eq:
      w.u8(F_EQ); write_term(w, f->terms[0]); write_term(w, f->terms[1]); return;
    case Formula::Kind::TrueN:
      w.u8(F_TRUEN); w.varint(static_cast<uint64_t>(f->level));
      write_term(w, f->terms[0]); return;
    case Formula::Kind::ProofP:
      w.u8(F_PROOF); w.name(f->theory);
      write_term(w, f->terms[0]); write_term(w, f->terms[1]); return;
    case Formula::Kind::OracleProofP:
      w.u8(F_OPROOF); w.name(f->theory); w.varint(static_cast<uint64_t>(f->level));
      write_term(w, f->terms[0]); write_term(w, f->terms[1]); return;
    case Formula::Kind::Not:
      w.u8(F_NOT); write_formula(w, f->subs[0]); return;
    case Formula::Kind::And:
      w.u8(F_AND); write_formula(w, f->subs[0]); write_formula(w, f->subs[1]); return;
    case Formula::Kind::Or:
      w.u8(F_OR); write_formula(w, f->subs[0]); write_formula(w, f->subs[1]); return;
    case Formula::Kind::Implies:
      w.u8(F_IMPLIES); write_formula(w, f->subs[0]); write_formula(w, f->subs[1]); return;
    case Formula::Kind::Forall:
      w.u8(F_FORALL); w.name(f->var); write_formula(w, f->subs[0]); return;
    case Formula::Kind::Exists:
      w.u8(F_EXISTS); w.name(f->var); write_formula(w, f->subs[0]); return;
    case Formula::Kind::BForall:
      w.u8(F_BFORALL); w.name(f->var); write_term(w, f->terms[0]);
      write_formula(w, f->subs[0]); return;
    case Formula::Kind::BExists:
      w.u8(F_BEXISTS); w.name(f->var); write_term(w, f->terms[0]);
      write_formula(w, f->subs[0]); return;
  }
}

FormulaPtr read_formula(Reader& r) {
  uint8_t tag = r.u8();
  switch (tag) {
    case F_LESS: {
      TermPtr l = read_term(r), rr = read_term(r);
      return fm::less(l, rr);
    }
    case F_EQ: {
      TermPtr l = read_term(r), rr = read_term(r);
      return fm::eq(l, rr);
    }
    case F_TRUEN: {
      uint64_t lv = r.varint();
      if (lv < 1 || lv > 1'000'000) r.fail("bad TrueN level");
      return fm::true_n(static_cast<int>(lv), read_term(r));
    }
    case F_PROOF: {
      std::string th = r.name();
      if (th.empty()) r.fail("empty theory name");
      TermPtr p = read_term(r), f = read_term(r);
      return fm::proof_p(th, p, f);
    }
    case F_OPROOF: {
      std::string th = r.name();
      if (th.empty()) r.fail("empty theory name");
      uint64_t lv = r.varint();
      if (lv > 1'000'000) r.fail("bad OProof level");
      TermPtr p = read_term(r), f = read_term(r);
      return fm::oracle_proof_p(th, static_cast<int>(lv), p, f);
    }
    case F_NOT: return fm::lnot(read_formula(r));
    case F_AND: {
      FormulaPtr a = read_formula(r), b = read_formula(r);
      return fm::land(a, b);
    }
    case F_OR: {
      FormulaPtr a = read_formula(r), b = read_formula(r);
      return fm::lor(a, b);
    }
    case F_IMPLIES: {
      FormulaPtr a = read_formula(r), b = read_formula(r);
      return fm::implies(a, b);
    }
    case F_FORALL: {
      std::string v = r.name();
      return fm::forall(v, read_formula(r));
    }
    case F_EXISTS: {
      std::string v = r.name();
      return fm::exists(v, read_formula(r));
    }
    case F_BFORALL: {
      std::string v = r.name();
      TermPtr b = read_term(r);
      return fm::bforall(v, b, read_formula(r));
    }
    case F_BEXISTS: {
      std::string v = r.name();
      TermPtr b = read_term(r);
      return fm::bexists(v, b, read_formula(r));
    }
    default: r.fail("unknown formula tag " + std::to_string(tag));
  }
}

void write_proof(Writer& w, const Proof& p) {
  w.u8(P_PROOF);
  w.varint(p.lines.size());
  for (const auto& ln : p.lines) {
    switch (ln.kind) {
      case ProofLine::Kind::Axiom: w.u8(P_AXIOM); write_formula(w, ln.formula); break;
      case ProofLine::Kind::Taut: w.u8(P_TAUT); write_formula(w, ln.formula); break;
      case ProofLine::Kind::OracleTrue:
        w.u8(P_ORACLE); w.varint(static_cast<uint64_t>(ln.level));
        write_formula(w, ln.formula); break;
      case ProofLine::Kind::MP:
        w.u8(P_MP); w.varint(static_cast<uint64_t>(ln.ref1));
        w.varint(static_cast<uint64_t>(ln.ref2)); write_formula(w, ln.formula); break;
      case ProofLine::Kind::Gen:
        w.u8(P_GEN); w.varint(static_cast<uint64_t>(ln.ref1)); w.name(ln.gen_var);
        write_formula(w, ln.formula); break;
    }
  }
}

Proof read_proof(Reader& r) {
  if (r.u8() != P_PROOF) r.fail("not a proof code");
  uint64_t n = r.varint();
  if (n > 1'000'000) r.fail("proof too long");
  Proof p;
  p.lines.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    uint8_t tag = r.u8();
    switch (tag) {
      case P_AXIOM: p.lines.push_back(ProofLine::axiom(read_formula(r))); break;
      case P_TAUT: p.lines.push_back(ProofLine::taut(read_formula(r))); break;
      case P_ORACLE: {
        uint64_t lv = r.varint();
        if (lv > 1'000'000) r.fail("bad oracle level");
        p.lines.push_back(ProofLine::oracle(read_formula(r), static_cast<int>(lv)));
        break;
      }
      case P_MP: {
        uint64_t a = r.varint(), b = r.varint();
        p.lines.push_back(ProofLine::mp(read_formula(r), static_cast<int>(a),
                                        static_cast<int>(b)));
        break;
      }
      case P_GEN: {
        uint64_t a = r.varint();
        std::string v = r.name();
        p.lines.push_back(ProofLine::gen(read_formula(r), static_cast<int>(a), v));
        break;
      }
      default: r.fail("unknown proof line tag " + std::to_string(tag));
    }
  }
  return p;
}

}  // namespace

GNum encode(const TermPtr& t) {
  Writer w;
  write_term(w, t);
  return stream_to_nat(w.buf);
}

GNum encode(const FormulaPtr& f) {
  Writer w;
  write_formula(w, f);
  return stream_to_nat(w.buf);
}

GNum encode(const Proof& p) {
  Writer w;
  write_proof(w, p);
  return stream_to_nat(w.buf);
}

TermPtr decode_term(const GNum& g) {
  std::string s = nat_to_stream(g);
  Reader r(s);
  TermPtr t = read_term(r);
  r.expect_done();
  return t;
}

FormulaPtr decode_formula(const GNum& g) {
  std::string s = nat_to_stream(g);
  Reader r(s);
  FormulaPtr f = read_formula(r);
  r.expect_done();
  return f;
}

Proof decode_proof(const GNum& g) {
  std::string s = nat_to_stream(g);
  Reader r(s);
  Proof p = read_proof(r);
  r.expect_done();
  return p;
}

TermPtr numeral(const Nat& n) {
  if (n < 0) throw std::invalid_argument("numeral of a negative number");
  if (n == 0) return tm::zero();
  if (n == 1) return tm::one();
  // Binary scheme for ordinary magnitudes. Above 64 bits switch to a
  // balanced hi*2^k + lo split so the term stays logarithmically deep;
  // Goedel codes of fixpoint formulas run to hundreds of kilobits and a
  // bit-per-level chain would exhaust the call stack everywhere downstream.
  if (msb(n) >= 64) {
    unsigned long k = msb(n) / 2 + 1;
    Nat hi = n >> k;
    Nat lo = n - (hi << k);
    TermPtr high = tm::mul(numeral(hi), tm::exp(numeral(Nat(k))));
    if (lo == 0) return high;
    return tm::add(high, numeral(lo));
  }
  TermPtr two = tm::add(tm::one(), tm::one());
  TermPtr half = numeral(n >> 1);
  TermPtr even = tm::mul(two, half);
  if ((n & 1) == 0) return even;
  return tm::add(even, tm::one());
}

namespace {

// Witness searches re-evaluate code-builder terms on every candidate with
// unchanged arguments; a small memo keeps that linear.
using CodeKey = std::tuple<int, Nat, Nat, Nat>;

Nat memoized(int tag, const Nat& a, const Nat& b, const Nat& c,
             const std::function<Nat()>& compute) {
  thread_local std::map<CodeKey, Nat> cache;
  CodeKey key{tag, a, b, c};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  Nat r = compute();
  if (cache.size() > 4096) cache.clear();
  cache.emplace(std::move(key), r);
  return r;
}

}  // namespace

GNum sub_num(const GNum& u, const GNum& v, const Nat& w) {
  return memoized(0, u, v, w, [&] {
    FormulaPtr f = decode_formula(u);
    TermPtr x = decode_term(v);
    if (x->kind != Term::Kind::Var)
      throw DecodeError("sub: second argument does not code a variable");
    return encode(substitute_numeral(f, x->name, w));
  });
}

GNum imp_num(const GNum& a, const GNum& b) {
  return memoized(1, a, b, 0, [&] {
    return encode(fm::implies(decode_formula(a), decode_formula(b)));
  });
}

GNum all_num(const GNum& v, const GNum& a) {
  return memoized(2, v, a, 0, [&] {
    TermPtr x = decode_term(v);
    if (x->kind != Term::Kind::Var)
      throw DecodeError("all: first argument does not code a variable");
    return encode(fm::forall(x->name, decode_formula(a)));
  });
}

GNum not_num(const GNum& a) {
  return memoized(3, a, 0, 0, [&] { return encode(fm::lnot(decode_formula(a))); });
}

SeqCode seq_encode(const std::vector<Nat>& items) {
  Writer w;
  w.u8(S_SEQ);
  w.varint(items.size());
  for (const auto& n : items) w.nat(n);
  return stream_to_nat(w.buf);
}

std::vector<Nat> seq_decode(const SeqCode& s) {
  std::string bytes = nat_to_stream(s);
  Reader r(bytes);
  if (r.u8() != S_SEQ) r.fail("not a sequence code");
  uint64_t n = r.varint();
  if (n > 10'000'000) r.fail("sequence too long");
  std::vector<Nat> out;
  out.reserve(n);
  for (uint64_t i = 0; i < n; ++i) out.push_back(r.nat());
  r.expect_done();
  return out;
}

bool fin_seq(const Nat& s) {
  try {
    seq_decode(s);
    return true;
  } catch (const DecodeError&) {
    return false;
  }
}

size_t seq_len(const SeqCode& s) { return seq_decode(s).size(); }

Nat seq_at(const SeqCode& s, size_t i) {
  std::vector<Nat> items = seq_decode(s);
  if (i >= items.size())
    throw DecodeError("sequence projection out of range: " + std::to_string(i) +
                      " >= " + std::to_string(items.size()));
  return items[i];
}

std::string encoding_lock_json() {
  nlohmann::json tags = {
      {"term.zero", T_ZERO}, {"term.one", T_ONE}, {"term.var", T_VAR},
      {"term.exp", T_EXP}, {"term.add", T_ADD}, {"term.mul", T_MUL},
      {"term.sub", T_SUB}, {"term.imp", T_IMPC}, {"term.all", T_ALLC},
      {"term.neg", T_NOTC},
      {"formula.less", F_LESS}, {"formula.eq", F_EQ}, {"formula.truen", F_TRUEN},
      {"formula.proof", F_PROOF}, {"formula.oproof", F_OPROOF}, {"formula.not", F_NOT},
      {"formula.and", F_AND}, {"formula.or", F_OR}, {"formula.implies", F_IMPLIES},
      {"formula.forall", F_FORALL}, {"formula.exists", F_EXISTS},
      {"formula.bforall", F_BFORALL}, {"formula.bexists", F_BEXISTS},
      {"proof", P_PROOF}, {"proof.axiom", P_AXIOM}, {"proof.taut", P_TAUT},
      {"proof.oracle", P_ORACLE}, {"proof.mp", P_MP}, {"proof.gen", P_GEN},
      {"seq", S_SEQ},
  };
  auto fcode = [](const char* text) { return encode(parse_formula(text).ast).str(); };
  auto tcode = [](const TermPtr& t) { return encode(t).str(); };
  nlohmann::json samples = {
      {"0 = 0", fcode("0 = 0")},
      {"0 < 1", fcode("0 < 1")},
      {"E x. (x < 1)", fcode("E x. (x < 1)")},
      {"A y < z. (E x. (x = (y + 1)))", fcode("A y < z. (E x. (x = (y + 1)))")},
      {"~((0 = 1) & (0 < 1))", fcode("~((0 = 1) & (0 < 1))")},
      {"TrueN[1](x)", fcode("TrueN[1](x)")},
      {"Proof[toyEA](p, f)", fcode("Proof[toyEA](p, f)")},
      {"term:numeral(5)", tcode(numeral(5))},
      {"term:exp((1 + 1))", tcode(tm::exp(tm::add(tm::one(), tm::one())))},
      {"term:sub(x, y, z)", tcode(tm::sub(tm::var("x"), tm::var("y"), tm::var("z")))},
      {"seq:[]", seq_encode({}).str()},
      {"seq:[2,5]", seq_encode({Nat(2), Nat(5)}).str()},
  };
  nlohmann::json lock = {
      {"format", "tagged byte stream, little-endian base-256 with sentinel 0x01"},
      {"numeral_scheme", "binary: 0, 1, (1+1)*q, (1+1)*q+1"},
      {"tags", tags},
      {"samples", samples},
  };
  return lock.dump(2) + "\n";
}

}  // namespace fgh
