#ifndef HECKEWALKS_LAURENT_HPP
#define HECKEWALKS_LAURENT_HPP

#include <map>
#include <string>

#include "heckewalks/checked_int.hpp"

namespace heckewalks {

// Laurent polynomial in one variable with Int coefficients, stored as a
// sparse exponent -> coefficient map with no explicit zeros.  The same type
// doubles as a polynomial in q after substitution; only the display name of
// the variable changes.
class LaurentPoly {
public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return monomial(0, 1); }
  static LaurentPoly monomial(int exp, Int coeff);
  // v - v^{-1}, ubiquitous in Hecke-algebra formulas.
  static LaurentPoly v_minus_vinv();

  bool is_zero() const { return c_.empty(); }
  Int coeff(int exp) const;
  int min_exp() const; // throws DomainError on zero
  int max_exp() const;

  // Substitute v -> v^{-1}.
  LaurentPoly bar() const;

  // v^2 -> q (dir = +1) or v^{-2} -> q (dir = -1).  Throws DomainError if an
  // odd exponent is present; the substitution would not be a polynomial.
  LaurentPoly substitute_q(int dir) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly pow(unsigned n) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ < b.c_; }

  const std::map<int, Int>& coeffs() const { return c_; }

  // Human-readable rendering, e.g. "v^2 - 2 + v^-2" or "q - 1".
  std::string str(const std::string& var = "v") const;

private:
  std::map<int, Int> c_;
};

} // namespace heckewalks

#endif
