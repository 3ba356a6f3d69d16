#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fanorat {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a mathematical precondition of an operation is violated.
struct MathError : std::runtime_error {
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exact computation would exceed a configured bound.
struct ResourceError : std::runtime_error {
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("64-bit overflow") {}
};

// Machine integer with overflow detection; algorithms run on this first and
// restart on arbitrary precision integers if it throws.
struct CheckedI64 {
  std::int64_t v = 0;

  CheckedI64() = default;
  CheckedI64(std::int64_t x) : v(x) {}

  friend CheckedI64 operator+(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  friend CheckedI64 operator-(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  friend CheckedI64 operator*(CheckedI64 a, CheckedI64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v, b.v, &r)) throw OverflowError{};
    return r;
  }
  friend CheckedI64 operator/(CheckedI64 a, CheckedI64 b) {
    if (b.v == 0) throw MathError("division by zero");
    if (a.v == INT64_MIN && b.v == -1) throw OverflowError{};
    return a.v / b.v;
  }
  friend CheckedI64 operator%(CheckedI64 a, CheckedI64 b) {
    if (b.v == 0) throw MathError("division by zero");
    if (a.v == INT64_MIN && b.v == -1) throw OverflowError{};
    return a.v % b.v;
  }
  CheckedI64 operator-() const {
    if (v == INT64_MIN) throw OverflowError{};
    return -v;
  }
  CheckedI64& operator+=(CheckedI64 b) { return *this = *this + b; }
  CheckedI64& operator-=(CheckedI64 b) { return *this = *this - b; }
  CheckedI64& operator*=(CheckedI64 b) { return *this = *this * b; }
  friend bool operator==(CheckedI64 a, CheckedI64 b) { return a.v == b.v; }
  friend bool operator!=(CheckedI64 a, CheckedI64 b) { return a.v != b.v; }
  friend bool operator<(CheckedI64 a, CheckedI64 b) { return a.v < b.v; }
  friend bool operator>(CheckedI64 a, CheckedI64 b) { return a.v > b.v; }
  bool is_zero() const { return v == 0; }
  CheckedI64 abs() const { return v < 0 ? -*this : *this; }
};

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Parses an exact fraction string "a/b" or integer string "a".
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& x);

}  // namespace fanorat
