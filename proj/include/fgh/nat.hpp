#ifndef FGH_NAT_HPP
#define FGH_NAT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgh {

// Natural numbers of the object domain. Negative values never occur; every
// operation that could underflow is guarded at the call site.
using Nat = boost::multiprecision::cpp_int;

struct EvalError : std::runtime_error {
  explicit EvalError(const std::string& m) : std::runtime_error(m) {}
};

struct DecodeError : std::runtime_error {
  explicit DecodeError(const std::string& m) : std::runtime_error(m) {}
};

struct ShapeError : std::runtime_error {
  explicit ShapeError(const std::string& m) : std::runtime_error(m) {}
};

struct ParseError : std::runtime_error {
  size_t offset;
  ParseError(const std::string& m, size_t off)
      : std::runtime_error(m + " at offset " + std::to_string(off)), offset(off) {}
};

// 2^e with a resource guard; exponent towers explode long before bignums give
// out, and a thrown guard beats an unbounded allocation.
inline Nat pow2(const Nat& e) {
  if (e > 50'000'000) throw EvalError("exp argument too large: 2^" + e.str());
  Nat r = 1;
  return r << static_cast<unsigned long>(e);
}

inline uint64_t to_u64(const Nat& n, const char* what) {
  if (n > std::numeric_limits<uint64_t>::max())
    throw EvalError(std::string(what) + " does not fit in 64 bits: " + n.str());
  return static_cast<uint64_t>(n);
}

}  // namespace fgh

#endif
