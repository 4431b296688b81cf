#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace crosscap {

// Wide signed integer used for all continued-fraction arithmetic.
using Int = __int128;

// Largest admissible torus-knot parameter. With p, q below 2^31 the largest
// intermediate, p^2 * q, stays under 2^93, and genus and crossing number fit
// in 64 bits.
inline constexpr std::int64_t kMaxParameter = 2'147'483'647;

class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Raised when a Bredon-Wood total consumed by the crosscap classification
// is odd. Never a user error.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
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

// Narrowing with a range check.
inline std::int64_t to_int64(Int v) {
  if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("value does not fit in 64 bits");
  return static_cast<std::int64_t>(v);
}

constexpr Int gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string to_string(Int v);

}  // namespace crosscap
