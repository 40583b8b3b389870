#ifndef FGH_CODING_HPP
#define FGH_CODING_HPP

#include <string>
#include <vector>

#include "fgh/formula.hpp"
#include "fgh/nat.hpp"

namespace fgh {

struct Proof;  // proof.hpp

// Goedel numbers and sequence codes. A syntactic object is serialized to a
// tagged byte stream and the stream is read as a natural number with a
// sentinel byte on top, so code length is linear in formula size. The tag
// table is frozen in encoding.lock; changing it is a breaking change.
using GNum = Nat;
using SeqCode = Nat;

GNum encode(const TermPtr& t);
GNum encode(const FormulaPtr& f);
GNum encode(const Proof& p);

TermPtr decode_term(const GNum& g);      // throws DecodeError
FormulaPtr decode_formula(const GNum& g);
Proof decode_proof(const GNum& g);

// Closed term of size O(log n) evaluating to n (binary scheme:
// 0, 1, (1+1)*q for even, (1+1)*q + 1 for odd).
TermPtr numeral(const Nat& n);

// sub_num(code(phi), code(var x), w) = code(phi[x := numeral(w)]).
GNum sub_num(const GNum& u, const GNum& v, const Nat& w);

// Standard-model interpretations of the remaining code builders.
GNum imp_num(const GNum& a, const GNum& b);   // code of (decode(a) -> decode(b))
GNum all_num(const GNum& v, const GNum& a);   // code of (A x. decode(a)), v codes x
GNum not_num(const GNum& a);                  // code of ~decode(a)

// Finite sequences of naturals.
SeqCode seq_encode(const std::vector<Nat>& items);
std::vector<Nat> seq_decode(const SeqCode& s);
bool fin_seq(const Nat& s);
size_t seq_len(const SeqCode& s);
Nat seq_at(const SeqCode& s, size_t i);  // throws DecodeError when out of range

// The frozen description of the encoding (tag table plus sample codes),
// compared against encoding.lock by the coding suite.
std::string encoding_lock_json();

}  // namespace fgh

#endif
