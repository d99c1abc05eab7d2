#ifndef HECKEWALKS_COXETER_HPP
#define HECKEWALKS_COXETER_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "heckewalks/checked_int.hpp"

namespace heckewalks {

// Square integer matrix, row-major.  Everything the library does with Weyl
// groups lives in the root-lattice coordinates, so a handful of exact
// integer matrix operations is all the linear algebra we need.
class IntMatrix {
public:
  IntMatrix() : n_(0) {}
  explicit IntMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, Int(0)) {}

  static IntMatrix identity(int n);

  int size() const { return n_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  Int at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  std::vector<Int> apply(const std::vector<Int>& v) const;

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }
  friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }
  friend bool operator<(const IntMatrix& a, const IntMatrix& b);

private:
  int n_;
  std::vector<Int> a_;
};

// A Kac-Moody root system presented by a generalized Cartan matrix.
// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>, so the simple
// reflection s_i acts on root coordinates by
//   s_i(alpha_j) = alpha_j - cartan(i, j) * alpha_i.
// Instances are immutable and cheap to copy (shared internals).
class RootSystem {
public:
  // Validates the matrix: square, 2 on the diagonal, non-positive integers
  // off it, and a symmetric zero pattern.  Each failure mode gets its own
  // diagnostic.  label_base is the display offset for generator/root
  // subscripts: finite systems use 1..n, affinizations use 0..n.
  static RootSystem from_cartan(const std::vector<std::vector<long long>>& cartan,
                                int label_base = 1);

  int rank() const;
  int label_base() const;
  Int cartan(int i, int j) const;
  const IntMatrix& cartan_matrix() const;
  const IntMatrix& simple_reflection_matrix(int i) const;

  // Same underlying system, or a distinct system with an identical Cartan
  // matrix.  Elements of compatible systems may be combined.
  bool compatible(const RootSystem& o) const;

  friend bool operator==(const RootSystem& a, const RootSystem& b) {
    return a.compatible(b);
  }

private:
  struct Data;
  explicit RootSystem(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
  friend class WeylElt;
};

// A real root, stored as coordinates in the basis of simple roots.  Real
// roots have all-nonnegative or all-nonpositive coordinates; construction
// rejects mixed signs and zero.
class Root {
public:
  Root(const RootSystem& rs, std::vector<Int> coords);
  static Root simple(const RootSystem& rs, int i);

  const std::vector<Int>& coords() const { return c_; }
  int rank() const { return static_cast<int>(c_.size()); }
  bool is_positive() const { return positive_; }
  Root negated() const;
  Int height() const; // sum of coordinates

  friend bool operator==(const Root& a, const Root& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  friend bool operator<(const Root& a, const Root& b) { return a.c_ < b.c_; }

  std::string str(int label_base = 1) const; // e.g. "a1+2a2", "-a0"

private:
  std::vector<Int> c_;
  bool positive_;
};

// A word in the simple reflections: a sequence of generator indices,
// 0-based.  Not required to be reduced.
struct Expression {
  std::vector<int> letters;

  Expression() = default;
  Expression(std::initializer_list<int> l) : letters(l) {}
  explicit Expression(std::vector<int> l) : letters(std::move(l)) {}

  int length() const { return static_cast<int>(letters.size()); }
  Expression reversed() const;

  friend bool operator==(const Expression& a, const Expression& b) {
    return a.letters == b.letters;
  }
  friend bool operator!=(const Expression& a, const Expression& b) { return !(a == b); }
  friend bool operator<(const Expression& a, const Expression& b) {
    return a.letters < b.letters;
  }
};

// An expression together with a keep/drop mask: position k of the
// subexpression is either the letter of the expression (kept) or the
// identity (dropped).  Masks are stored big-endian -- the leftmost position
// is the highest bit -- so that enumerating masks as integers 0..2^r-1
// yields the documented output order ("00", "01", "10", "11" for r = 2).
class Subexpression {
public:
  Subexpression(Expression expr, std::uint64_t mask);
  static Subexpression full(Expression expr);

  const Expression& expression() const { return expr_; }
  int length() const { return expr_.length(); }
  std::uint64_t mask() const { return mask_; }
  bool kept(int k) const; // 0-based position
  int kept_count() const;

  std::string mask_string() const;                               // e.g. "110"
  static std::uint64_t mask_from_string(const std::string& s, int r); // ParseError on junk

  // Same expression, with every kept position of *this also kept in tau.
  bool refines(const Subexpression& tau) const;

  // Both the expression and the mask read right-to-left.
  Subexpression reversed() const;

  friend bool operator==(const Subexpression& a, const Subexpression& b) {
    return a.expr_ == b.expr_ && a.mask_ == b.mask_;
  }
  friend bool operator!=(const Subexpression& a, const Subexpression& b) {
    return !(a == b);
  }

private:
  Expression expr_;
  std::uint64_t mask_;
};

// An element of the Weyl group, represented faithfully by its matrix on the
// root lattice.  Equality, ordering, everything observable depends only on
// the matrix; the cached word is an optimization set when a constructor
// happens to know the canonical reduced word already.
class WeylElt {
public:
  static WeylElt identity(const RootSystem& rs);
  static WeylElt simple(const RootSystem& rs, int i);

  const IntMatrix& matrix() const { return m_; }
  const RootSystem& system() const { return rs_; }
  const std::optional<Expression>& cached_word() const { return word_; }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.m_ == b.m_; }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a == b); }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.m_ < b.m_; }

private:
  WeylElt(RootSystem rs, IntMatrix m, std::optional<Expression> w)
      : rs_(std::move(rs)), m_(std::move(m)), word_(std::move(w)) {}
  RootSystem rs_;
  IntMatrix m_;
  std::optional<Expression> word_; // canonical reduced word, when known

  friend WeylElt mul(const WeylElt&, const WeylElt&);
  friend WeylElt inv(const WeylElt&);
  friend Expression reduced_word(const WeylElt&);
};

// --- operations ---------------------------------------------------------

// s_i applied to a root.
Root reflect(const RootSystem& rs, int i, const Root& beta);

WeylElt mul(const WeylElt& a, const WeylElt& b);
WeylElt inv(const WeylElt& w);
Root act(const WeylElt& w, const Root& beta);

// Product of the letters of an expression / the kept letters of a
// subexpression.
WeylElt product(const RootSystem& rs, const Expression& expr);
WeylElt product(const RootSystem& rs, const Subexpression& tau);

// Coxeter length, computed by iterated descent.
int length(const WeylElt& w);

// Canonical reduced word: repeatedly strip the smallest descent, i.e. the
// smallest i with w(alpha_i) negative.  Deterministic, so suitable for
// serialization keys.
Expression reduced_word(const WeylElt& w);

bool is_reduced(const RootSystem& rs, const Expression& expr);

// Inv(w^{-1}): the positive roots beta with w^{-1}(beta) negative,
// enumerated along a reduced word of w.  Sorted; cardinality = length(w).
std::vector<Root> inversions(const WeylElt& w);

// Bruhat order, by the descent recursion.
bool bruhat_leq(const WeylElt& u, const WeylElt& w);

// All 2^r subexpressions of expr in ascending mask order.  Guarded against
// absurd r; intended for the exhaustive enumerations in this library.
std::vector<Subexpression> subexpressions(const Expression& expr);

// All group elements of length <= max_len, sorted.  (Finite systems only
// reach a longest element; for affine systems the ball keeps growing.)
std::vector<WeylElt> weyl_ball(const RootSystem& rs, int max_len);

void validate_generator_index(const RootSystem& rs, int i);
void validate_expression(const RootSystem& rs, const Expression& expr);

} // namespace heckewalks

#endif
