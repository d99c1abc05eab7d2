#ifndef HECKEWALKS_HECKE_HPP
#define HECKEWALKS_HECKE_HPP

#include <map>
#include <string>
#include <vector>

#include "heckewalks/coxeter.hpp"
#include "heckewalks/laurent.hpp"
#include "heckewalks/walk.hpp"

namespace heckewalks {

// Element of the Hecke algebra in the standard basis {T_w}, with Laurent
// polynomial coefficients in v.  Quadratic relation: (T_i - v)(T_i + v^{-1}) = 0,
// so T_i^{-1} = T_i - (v - v^{-1}).
class HeckeElt {
public:
  HeckeElt() = default;
  static HeckeElt zero() { return HeckeElt(); }
  static HeckeElt basis(const WeylElt& w) {
    HeckeElt h;
    h.terms_[w] = LaurentPoly::one();
    return h;
  }
  static HeckeElt unit(const RootSystem& rs) { return basis(WeylElt::identity(rs)); }

  void add(const WeylElt& w, const LaurentPoly& p);
  LaurentPoly coeff(const WeylElt& w) const;
  const std::map<WeylElt, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(const LaurentPoly& p, const HeckeElt& h);

  friend bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const HeckeElt& a, const HeckeElt& b) { return !(a == b); }

  std::string str() const;

private:
  std::map<WeylElt, LaurentPoly> terms_;
};

// Right multiplication by T_i (exponent +1) or T_i^{-1} (exponent -1).
HeckeElt mul_gen(const HeckeElt& h, int i, int exponent);

// T_{i_1}^{e_1} ... T_{i_r}^{e_r}.  exponents must have the word's length;
// the all-plus convenience overload gives T of the word's product when the
// word is reduced.
HeckeElt word_product(const RootSystem& rs, const Expression& word,
                      const std::vector<int>& exponents);
HeckeElt word_product(const RootSystem& rs, const Expression& word);

// The homomorphism from the walk algebra:
//   c_i^{+-} -> T_i^{+-1},   f_i^{+-} -> +-(v - v^{-1}).
HeckeElt walk_to_hecke(const RootSystem& rs, const WalkWord& w);
HeckeElt walk_to_hecke(const RootSystem& rs, const WalkElt& e);

// Oriented basis element T(tau <= sigma, A) = image of the oriented word.
// For a group element, the orientation is applied along its canonical
// reduced word; the result is independent of that choice.
HeckeElt oriented_basis(const RootSystem& rs, const Subexpression& tau, const Orientation& A);
HeckeElt oriented_basis(const WeylElt& w, const Orientation& A);

// R-polynomials.  Main path: sum v^{l(w)-l(u)} (v - v^{-1})^{kappa} over
// distinguished subexpressions of a reduced word for w with product u,
// taken between the standard orientation and its negation.  Returned in v;
// substitute v^2 -> q for the classical normalization.
LaurentPoly r_polynomial(const WeylElt& u, const WeylElt& w);
std::map<WeylElt, LaurentPoly> r_polynomial_row(const WeylElt& w);

// Oracle: expand bar(T_w) = T_{i_1}^{-1} ... T_{i_r}^{-1} (bar is a ring
// automorphism) in the T-basis and read the R-polynomials off the
// coefficients: R_{u,w} = v^{l(w)-l(u)} bar(coefficient of T_u).
std::map<WeylElt, LaurentPoly> r_polynomial_row_bar_oracle(const WeylElt& w);

// Point-count polynomials: for a reduced expression sigma and orientation
// A', the distinguished subexpressions with product u contribute
// v^{2 zeta_plus} (v^2 - 1)^{kappa}.  Returned as polynomials in q = v^2.
// Also evaluates the equivalent closed form
//   v^{l(w) + oriented_length(A', u)} * sum (v - v^{-1})^{kappa}
// and insists the two agree.
std::map<WeylElt, LaurentPoly> point_count_row(const RootSystem& rs, const Expression& sigma,
                                               const Orientation& Aprime);
LaurentPoly point_count(const RootSystem& rs, const Expression& sigma, const Orientation& Aprime,
                        const WeylElt& u);

} // namespace heckewalks

#endif
