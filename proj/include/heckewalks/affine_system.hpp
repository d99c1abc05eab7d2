#ifndef HECKEWALKS_AFFINE_SYSTEM_HPP
#define HECKEWALKS_AFFINE_SYSTEM_HPP

#include <vector>

#include "heckewalks/coxeter.hpp"

namespace heckewalks {

// A real affine root split into its finite part and its delta coefficient:
// beta = classical + level * delta.  The classical part of a real affine
// root is itself a real (nonzero) finite root.
struct AffineRoot {
  Root classical;
  Int level;
};

// The untwisted affinization of a finite root system.  Carries both the
// finite system and its affinization (node 0 is the affine node), plus the
// highest root theta, its coroot, and 2rho = sum of positive roots --
// the standing ingredients of alcove-walk formulas.
//
// Elements of the affine Weyl group appear in two interchangeable forms:
// as WeylElt matrices over the affine system, and as (translation, finite
// part) pairs via AffineElt below.
class AffineSystem {
public:
  // Builds from a finite-type Cartan matrix.  Rejects anything that is not
  // finite type (the positive-root enumeration would not terminate).
  static AffineSystem from_finite(const std::vector<std::vector<long long>>& cartan);
  static AffineSystem from_finite(const RootSystem& finite);

  // Accepts an (n+1) x (n+1) affine GCM whose node 0 is the affine node of
  // the untwisted affinization of nodes 1..n; anything else is rejected.
  static AffineSystem from_affine_gcm(const std::vector<std::vector<long long>>& cartan);

  const RootSystem& finite() const { return finite_; }
  const RootSystem& affine() const { return affine_; }

  const Root& theta() const { return theta_; }
  // Coordinates of theta^vee in the simple coroots.
  const std::vector<Int>& theta_coroot() const { return theta_coroot_; }
  // Coordinates of 2rho (sum of positive roots) in the simple roots.
  const std::vector<Int>& two_rho() const { return two_rho_; }
  const std::vector<Root>& positive_roots() const { return positive_roots_; }
  // Reflection in theta, as an element of the finite Weyl group.
  const WeylElt& s_theta() const { return s_theta_; }

  // beta = classical + level * delta, with delta = alpha_0 + theta.
  AffineRoot split(const Root& affine_root) const;
  Root join(const AffineRoot& r) const; // inverse of split

  // <lambda, beta> for lambda in coroot coordinates, beta a finite root.
  Int pair(const std::vector<Int>& lambda, const Root& beta) const;
  // <lambda, 2rho>.
  Int pair_two_rho(const std::vector<Int>& lambda) const;

private:
  AffineSystem(RootSystem fin, RootSystem aff, Root theta, std::vector<Int> theta_coroot,
               std::vector<Int> two_rho, std::vector<Root> positives, WeylElt s_theta);

  RootSystem finite_;
  RootSystem affine_;
  Root theta_;
  std::vector<Int> theta_coroot_;
  std::vector<Int> two_rho_;
  std::vector<Root> positive_roots_;
  WeylElt s_theta_;
};

// An affine Weyl group element in the form (translation by lambda) * u
// with lambda a coroot-lattice vector and u in the finite Weyl group.
class AffineElt {
public:
  static AffineElt identity(const AffineSystem& aff);
  static AffineElt translation(const AffineSystem& aff, std::vector<Int> lambda);
  // Simple reflection for an affine generator index 0..n (0 = affine node).
  static AffineElt simple(const AffineSystem& aff, int i);

  const std::vector<Int>& weight() const { return lambda_; }
  const WeylElt& direction() const { return u_; }

  friend bool operator==(const AffineElt& a, const AffineElt& b) {
    return a.lambda_ == b.lambda_ && a.u_ == b.u_;
  }
  friend bool operator!=(const AffineElt& a, const AffineElt& b) { return !(a == b); }
  friend bool operator<(const AffineElt& a, const AffineElt& b) {
    if (a.lambda_ != b.lambda_) return a.lambda_ < b.lambda_;
    return a.u_ < b.u_;
  }

private:
  AffineElt(std::vector<Int> lambda, WeylElt u) : lambda_(std::move(lambda)), u_(std::move(u)) {}
  std::vector<Int> lambda_;
  WeylElt u_;
  friend AffineElt affine_mul(const AffineSystem&, const AffineElt&, const AffineElt&);
  friend AffineElt affine_inv(const AffineSystem&, const AffineElt&);
};

// The contragredient action of w on coroot coordinates.
std::vector<Int> coroot_act(const RootSystem& rs, const WeylElt& w, const std::vector<Int>& c);

AffineElt affine_mul(const AffineSystem& aff, const AffineElt& a, const AffineElt& b);
AffineElt affine_inv(const AffineSystem& aff, const AffineElt& x);
AffineRoot affine_act(const AffineSystem& aff, const AffineElt& x, const AffineRoot& beta);

// Conversions between the two representations of the affine Weyl group.
WeylElt to_weyl(const AffineSystem& aff, const AffineElt& x);
AffineElt from_weyl(const AffineSystem& aff, const WeylElt& w);

Expression to_word(const AffineSystem& aff, const AffineElt& x);
AffineElt from_word(const AffineSystem& aff, const Expression& expr);
int affine_length(const AffineSystem& aff, const AffineElt& x);

// Minimal-length representative of the coset (translation by lambda) * W_fin.
struct MinCosetRep {
  AffineElt m;       // the representative, weight(m) = lambda
  Expression word;   // canonical reduced word of m in the affine generators
  WeylElt u_lambda;  // the finite element with m = translation(lambda) * u_lambda^{-1}
};
MinCosetRep min_coset_rep(const AffineSystem& aff, const std::vector<Int>& lambda);

// Length with respect to the periodic orientation: sign = +1 gives
// -<lambda, 2rho> + length(u) for x = translation(lambda) * u, sign = -1 its
// negative.  Matches the root-by-root sign sum (tested, not assumed).
Int periodic_length(const AffineSystem& aff, const AffineElt& x, int sign);

} // namespace heckewalks

#endif
