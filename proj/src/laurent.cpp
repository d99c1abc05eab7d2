#include "heckewalks/laurent.hpp"

#include <sstream>

namespace heckewalks {

LaurentPoly LaurentPoly::monomial(int exp, Int coeff) {
  LaurentPoly p;
  if (coeff != Int(0)) p.c_[exp] = coeff;
  return p;
}

LaurentPoly LaurentPoly::v_minus_vinv() {
  LaurentPoly p;
  p.c_[1] = 1;
  p.c_[-1] = -1;
  return p;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Int(0) : it->second;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw DomainError("min_exp of zero polynomial");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw DomainError("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentPoly LaurentPoly::substitute_q(int dir) const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) {
    if (e % 2 != 0)
      throw DomainError("cannot substitute q for v^2: odd exponent " + std::to_string(e));
    r.c_[dir > 0 ? e / 2 : -e / 2] = c;
  }
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    Int s = coeff(e) + c;
    if (s == Int(0))
      c_.erase(e);
    else
      c_[e] = s;
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.c_) {
    Int s = coeff(e) - c;
    if (s == Int(0))
      c_.erase(e);
    else
      c_[e] = s;
  }
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) {
      int e = ea + eb; // exponents stay minuscule; int is plenty
      Int s = r.coeff(e) + ca * cb;
      if (s == Int(0))
        r.c_.erase(e);
      else
        r.c_[e] = s;
    }
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = one();
  for (unsigned k = 0; k < n; ++k) r *= *this;
  return r;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  // highest exponent first reads like a polynomial
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    long long c = it->second.value();
    int e = it->first;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) out << a;
    if (e != 0) {
      if (a != 1) out << "*";
      out << var;
      if (e != 1) out << "^" << e;
    }
    first = false;
  }
  return out.str();
}

} // namespace heckewalks
