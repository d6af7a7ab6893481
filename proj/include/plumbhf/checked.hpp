#pragma once

#include <cstdint>

#include "errors.hpp"

namespace plumbhf {

// All lattice arithmetic runs on 64-bit signed integers with explicit
// overflow detection; overflow is a hard error, never a silent wrap.
using i64 = std::int64_t;

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("integer overflow in addition: input exceeds the supported 64-bit scale");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r))
    throw OverflowError("integer overflow in subtraction: input exceeds the supported 64-bit scale");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("integer overflow in multiplication: input exceeds the supported 64-bit scale");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

}  // namespace plumbhf
