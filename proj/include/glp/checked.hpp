#pragma once

#include <cstdint>

#include "glp/error.hpp"

namespace glp {

// All ring arithmetic funnels through these helpers.

template <class Int>
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw IntegerOverflow("integer overflow in addition");
  return r;
}

template <class Int>
inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw IntegerOverflow("integer overflow in subtraction");
  return r;
}

template <class Int>
inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw IntegerOverflow("integer overflow in multiplication");
  return r;
}

}  // namespace glp
