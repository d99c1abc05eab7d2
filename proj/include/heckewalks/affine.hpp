#ifndef HECKEWALKS_AFFINE_HPP
#define HECKEWALKS_AFFINE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "heckewalks/affine_system.hpp"
#include "heckewalks/hecke.hpp"
#include "heckewalks/laurent.hpp"
#include "heckewalks/orientation.hpp"
#include "heckewalks/walk.hpp"

namespace heckewalks {

// Element of the group algebra of the coroot lattice with Laurent
// polynomial coefficients: finite sums  sum_lambda  c_lambda(v) X^lambda,
// keyed by the coroot coordinates of lambda.
class GroupAlgebraElt {
public:
  GroupAlgebraElt() = default;
  static GroupAlgebraElt zero() { return GroupAlgebraElt(); }
  static GroupAlgebraElt monomial(std::vector<Int> lambda, LaurentPoly c);
  static GroupAlgebraElt one(const AffineSystem& aff);

  void add(const std::vector<Int>& lambda, const LaurentPoly& c);
  const std::map<std::vector<Int>, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GroupAlgebraElt& operator+=(const GroupAlgebraElt& o);
  GroupAlgebraElt& operator-=(const GroupAlgebraElt& o);
  friend GroupAlgebraElt operator+(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a += b; }
  friend GroupAlgebraElt operator-(GroupAlgebraElt a, const GroupAlgebraElt& b) { return a -= b; }
  friend GroupAlgebraElt operator*(const LaurentPoly& p, const GroupAlgebraElt& g);
  // X^mu * g (shift every exponent by mu).
  GroupAlgebraElt shifted(const std::vector<Int>& mu) const;

  friend bool operator==(const GroupAlgebraElt& a, const GroupAlgebraElt& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const GroupAlgebraElt& a, const GroupAlgebraElt& b) { return !(a == b); }

  std::string str() const;

private:
  std::map<std::vector<Int>, LaurentPoly> terms_;
};

// The polynomial representation of the affine Hecke algebra on the group
// algebra above.  For a finite generator (affine index i >= 1),
//   T_i f = v s_i(f) + (v - v^{-1}) (f - s_i f) / (1 - X^{alpha_i^vee}),
// with the division carried out exactly monomial by monomial (a geometric
// series that terminates).  The affine generator factors through
//   T_0 = T_{s_theta}^{-1} X^{-theta^vee},   T_0^{-1} = X^{theta^vee} T_{s_theta}.
// exponent selects T_i (+1) or T_i^{-1} (-1).
GroupAlgebraElt polyrep_apply(const AffineSystem& aff, int i, int exponent,
                              const GroupAlgebraElt& f);

// s_i acting on exponents (i a finite index, 0-based in the finite system).
GroupAlgebraElt polyrep_reflect(const AffineSystem& aff, int finite_i, const GroupAlgebraElt& f);

enum class Specialization { AtZero, AtInfinity };

// Nonsymmetric Macdonald polynomial at a spectral-parameter limit, by the
// direct operator route: apply T^{+-1} along the minimal coset word for
// lambda to the constant 1, then scale by v^{-l(u_lambda)}.
// AtInfinity uses plain generators, AtZero their inverses.
GroupAlgebraElt macdonald_direct(const AffineSystem& aff, const std::vector<Int>& lambda,
                                 Specialization which);

// The same polynomial as a sum over distinguished subexpressions of the
// minimal coset word, taken from the standard orientation into the periodic
// one (+ for AtInfinity, - for AtZero): each tau contributes
// (v - v^{-1})^kappa (bar of it for AtZero) X^{weight} v^{l(direction)}.
GroupAlgebraElt macdonald_oriented(const AffineSystem& aff, const std::vector<Int>& lambda,
                                   Specialization which);

// --- Bernstein presentation ----------------------------------------------

// Element of the affine Hecke algebra written in the basis X^lambda T_u
// (lambda over the coroot lattice, u in the finite Weyl group).
class BernsteinElt {
public:
  BernsteinElt() = default;
  static BernsteinElt zero() { return BernsteinElt(); }
  static BernsteinElt unit(const AffineSystem& aff);
  static BernsteinElt X(const AffineSystem& aff, std::vector<Int> lambda);
  static BernsteinElt T(const AffineSystem& aff, const WeylElt& u); // u finite

  void add(const std::vector<Int>& lambda, const WeylElt& u, const LaurentPoly& c);
  const std::map<std::pair<std::vector<Int>, WeylElt>, LaurentPoly>& terms() const {
    return terms_;
  }
  bool is_zero() const { return terms_.empty(); }

  BernsteinElt& operator+=(const BernsteinElt& o);
  BernsteinElt& operator-=(const BernsteinElt& o);
  friend BernsteinElt operator+(BernsteinElt a, const BernsteinElt& b) { return a += b; }
  friend BernsteinElt operator-(BernsteinElt a, const BernsteinElt& b) { return a -= b; }
  friend BernsteinElt operator*(const LaurentPoly& p, const BernsteinElt& h);

  friend bool operator==(const BernsteinElt& a, const BernsteinElt& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BernsteinElt& a, const BernsteinElt& b) { return !(a == b); }

  std::string str() const;

private:
  std::map<std::pair<std::vector<Int>, WeylElt>, LaurentPoly> terms_;
};

// Right multiplication by X^mu; uses the commutation of T_u past X^mu,
// whose division by 1 - X^{alpha^vee} is again exact.
BernsteinElt bernstein_mul_X(const AffineSystem& aff, const BernsteinElt& a,
                             const std::vector<Int>& mu);
// Right multiplication by T_j^{+-1} for a finite generator (affine index j >= 1).
BernsteinElt bernstein_mul_T(const AffineSystem& aff, const BernsteinElt& a, int j, int exponent);
// Right multiplication by any affine generator; index 0 goes through the
// factorization of T_0.
BernsteinElt bernstein_mul_gen(const AffineSystem& aff, const BernsteinElt& a, int i,
                               int exponent);
BernsteinElt bernstein_mul(const AffineSystem& aff, const BernsteinElt& a, const BernsteinElt& b);

// T_{i_1}^{e_1} ... T_{i_r}^{e_r} over affine generator indices.
BernsteinElt bernstein_word_product(const AffineSystem& aff, const Expression& word,
                                    const std::vector<int>& exponents);

// The oriented basis element T(x, A_periodic-plus) for an affine Weyl group
// element x: the walk letters along the canonical reduced word of x pick
// generator exponents, and the result always collapses to X^{weight} T_{direction}
// (asserted).
BernsteinElt bernstein_oriented(const AffineSystem& aff, const AffineElt& x);

// T_w for an affine Weyl element, expanded in the Bernstein basis two ways:
// by folding generators (reference), and as the sum over distinguished
// subexpressions from the standard into the periodic-plus orientation of
// (v - v^{-1})^kappa X^{weight} T_{direction}.
BernsteinElt bernstein_of_T_fold(const AffineSystem& aff, const WeylElt& w);
BernsteinElt bernstein_of_T_oriented_sum(const AffineSystem& aff, const WeylElt& w);

} // namespace heckewalks

#endif
