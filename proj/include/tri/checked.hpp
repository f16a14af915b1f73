#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tri {

using Int = std::int64_t;

/// Thrown when an exact integer operation leaves the int64 range.
class OverflowError : public std::overflow_error {
 public:
  explicit OverflowError(const std::string& what) : std::overflow_error(what) {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

/// n(n+1)/2 without intermediate overflow when the result fits.
inline Int triangular(Int n) {
  Int a = n, b = checked_add(n, 1);
  if (a % 2 == 0) a /= 2; else b /= 2;
  return checked_mul(a, b);
}

}  // namespace tri
