#ifndef HECKEWALKS_CHECKED_INT_HPP
#define HECKEWALKS_CHECKED_INT_HPP

#include <cstdint>
#include <string>

#include "heckewalks/error.hpp"

namespace heckewalks {

// Overflow-checked 64-bit integer.  Every +, -, * traps overflow and throws
// instead of wrapping.  The quantities handled here (root coordinates,
// Weyl-group matrix entries, Laurent coefficients) stay tiny in practice,
// but "in practice" is not a proof, so the checks stay on everywhere.
class Int {
public:
  constexpr Int() : v_(0) {}
  constexpr Int(long long v) : v_(v) {} // NOLINT: implicit on purpose

  constexpr long long value() const { return v_; }

  friend Int operator+(Int a, Int b) {
    long long r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw_overflow("+", a.v_, b.v_);
    return Int(r);
  }
  friend Int operator-(Int a, Int b) {
    long long r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw_overflow("-", a.v_, b.v_);
    return Int(r);
  }
  friend Int operator*(Int a, Int b) {
    long long r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw_overflow("*", a.v_, b.v_);
    return Int(r);
  }
  friend Int operator-(Int a) { return Int(0) - a; }

  Int& operator+=(Int b) { return *this = *this + b; }
  Int& operator-=(Int b) { return *this = *this - b; }
  Int& operator*=(Int b) { return *this = *this * b; }

  friend constexpr bool operator==(Int a, Int b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Int a, Int b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Int a, Int b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Int a, Int b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Int a, Int b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Int a, Int b) { return a.v_ >= b.v_; }

private:
  [[noreturn]] static void throw_overflow(const char* op, long long a, long long b) {
    throw OverflowError("integer overflow in " + std::to_string(a) + " " + op + " " +
                        std::to_string(b));
  }

  long long v_;
};

inline std::string to_string(Int x) { return std::to_string(x.value()); }

} // namespace heckewalks

#endif
