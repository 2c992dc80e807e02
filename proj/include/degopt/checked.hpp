#pragma once

#include <cstdint>
#include <limits>

#include "degopt/error.hpp"

namespace degopt {

// Objective values and linear functionals are 64-bit with mandatory overflow
// detection; nothing in the library is allowed to wrap silently.
using Value = std::int64_t;

namespace checked {

template <typename T>
T add(T a, T b) {
  T out;
  if (__builtin_add_overflow(a, b, &out)) throw OverflowError("integer overflow in addition");
  return out;
}

template <typename T>
T sub(T a, T b) {
  T out;
  if (__builtin_sub_overflow(a, b, &out)) throw OverflowError("integer overflow in subtraction");
  return out;
}

template <typename T>
T mul(T a, T b) {
  T out;
  if (__builtin_mul_overflow(a, b, &out)) throw OverflowError("integer overflow in multiplication");
  return out;
}

template <typename T>
T neg(T a) {
  return sub(T{0}, a);
}

template <typename T>
T abs(T a) {
  return a < 0 ? neg(a) : a;
}

// Narrowing conversion that refuses to truncate.
template <typename To, typename From>
To narrow(From v) {
  if (v < static_cast<From>(std::numeric_limits<To>::min()) ||
      v > static_cast<From>(std::numeric_limits<To>::max()))
    throw OverflowError("integer value does not fit the target width");
  return static_cast<To>(v);
}

}  // namespace checked
}  // namespace degopt
