#pragma once

#include <cstdint>
#include <numeric>
#include <type_traits>

#include "torusfill/error.hpp"

namespace torusfill {

using Int = std::int64_t;
__extension__ typedef __int128 Wide;

// Overflow is a hard error everywhere in the library; nothing wraps silently.
namespace checked {

inline Int add(Int x, Int y) {
  Int r;
  if (__builtin_add_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

inline Int sub(Int x, Int y) {
  Int r;
  if (__builtin_sub_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer subtraction overflow");
  return r;
}

inline Int mul(Int x, Int y) {
  Int r;
  if (__builtin_mul_overflow(x, y, &r)) throw Error(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

inline Int neg(Int x) {
  return sub(0, x);
}

inline Int abs(Int x) {
  return x < 0 ? neg(x) : x;
}

/// x*w - y*z without intermediate wraparound.
inline Int det2(Int x, Int y, Int z, Int w) { return sub(mul(x, w), mul(y, z)); }

inline Int narrow(Wide v) {
  if (v > Wide(INT64_MAX) || v < Wide(INT64_MIN)) throw Error(ErrorKind::Overflow, "value exceeds 64 bits");
  return static_cast<Int>(v);
}

}  // namespace checked

inline Int gcd(Int x, Int y) { return std::gcd(checked::abs(x), checked::abs(y)); }

/// Extended gcd: returns g >= 0 with g = x*s + y*t.
struct ExtGcd {
  Int g;
  Int s;
  Int t;
};
ExtGcd ext_gcd(Int x, Int y);

/// Floor division and floor modulo for signed operands.
inline Int floor_div(Int x, Int y) {
  Int q = x / y;
  if ((x % y != 0) && ((x < 0) != (y < 0))) --q;
  return q;
}

}  // namespace torusfill
