#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace schur {

/// Exact solution counts. Every count in the public API is a Count.
using Count = std::int64_t;

/// Intermediate width for closed forms that are evaluated far from the
/// minimum (e.g. S(1,N) with N ~ 10^7 exceeds 2^63).
__extension__ typedef __int128 Wide;

/// Bad arguments: wrong lengths, out-of-range parameters, malformed strings.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A count that does not fit its integer type.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

template <class T>
T add(T a, T b) {
  T r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

template <class T>
T sub(T a, T b) {
  T r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

template <class T>
T mul(T a, T b) {
  T r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Count narrow(Wide w) {
  if (w > static_cast<Wide>(std::numeric_limits<Count>::max()) ||
      w < static_cast<Wide>(std::numeric_limits<Count>::min())) {
    throw OverflowError("count exceeds 64-bit range");
  }
  return static_cast<Count>(w);
}

}  // namespace checked

/// Decimal rendering of a 128-bit integer (iostreams have no overload).
std::string to_string(Wide w);

}  // namespace schur
