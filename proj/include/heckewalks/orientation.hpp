#ifndef HECKEWALKS_ORIENTATION_HPP
#define HECKEWALKS_ORIENTATION_HPP

#include <memory>
#include <string>
#include <vector>

#include "heckewalks/affine_system.hpp"
#include "heckewalks/coxeter.hpp"

namespace heckewalks {

// An orientation: a sign function on the real roots of a system, from the
// closed constructor pool
//   standard      sgn(beta) = +1 iff beta > 0
//   negated(A)    -A
//   twisted(x, A) sgn(beta) = sgn_A(x^{-1} beta)
//   cocharacter   sgn(beta) = sign of <eta, beta>, eta regular
//   periodic      affine systems only: sign of the finite part of beta
//                 (+1 variant), or its negative (-1 variant)
//
// Values are immutable and cheap to copy.  Twists are flattened and
// negations pushed outward at construction, so the internal tree depth
// stays bounded no matter how many twists a recursion piles up.
class Orientation {
public:
  enum class Kind { Standard, Negated, WeylTwisted, Cocharacter, Periodic };

  static Orientation standard(const RootSystem& rs);
  Orientation negated() const;
  static Orientation twisted(const WeylElt& x, const Orientation& inner);
  // Checks <eta, alpha_i> != 0 for every simple root up front; non-simple
  // roots are checked lazily at query time.
  static Orientation cocharacter(const RootSystem& rs, std::vector<Int> eta);
  static Orientation periodic(const AffineSystem& aff, int sign);

  int sgn(const Root& beta) const; // +1 or -1
  const RootSystem& system() const;
  Kind kind() const;

  // Canonical descriptor, e.g. "std", "-std", "w:0,1(std)", "eta:2,1",
  // "periodic:+".  Generator indices are 0-based internal indices.
  std::string str() const;

private:
  struct Node;
  explicit Orientation(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

// Orientation-weighted length: the sum of sgn_A over the inversion set
// {beta > 0 : w^{-1} beta < 0}.  Coincides with Coxeter length at the
// standard orientation, and may be negative elsewhere.
Int oriented_length(const Orientation& A, const WeylElt& w);

// 1^T adj(C): a dominant regular cocharacter for finite-type C, suitable as
// a default eta.  Throws if the result fails to pair positively with every
// simple root (as happens outside finite type).
std::vector<Int> dominant_regular_cocharacter(const RootSystem& rs);

} // namespace heckewalks

#endif
