#ifndef HECKEWALKS_WALK_HPP
#define HECKEWALKS_WALK_HPP

#include <map>
#include <string>
#include <vector>

#include "heckewalks/coxeter.hpp"
#include "heckewalks/orientation.hpp"

namespace heckewalks {

// Letters of the walk algebra: crossings c_i^{+-} and folds f_i^{+-}, one
// pair per simple reflection.  The defining relations are
//   c_i^+ = c_i^- + f_i^+,   f_i^- = -f_i^+,
// so monomials in the plus-letters alone form a basis (the "free normal
// form" below), and minus-letters are eliminated by
//   c_i^- = c_i^+ - f_i^+.
enum class Gen : unsigned char { C, F };

struct WalkLetter {
  Gen gen;
  int index; // simple reflection index, 0-based
  int sign;  // +1 or -1

  friend bool operator==(const WalkLetter& a, const WalkLetter& b) {
    return a.gen == b.gen && a.index == b.index && a.sign == b.sign;
  }
  friend bool operator<(const WalkLetter& a, const WalkLetter& b) {
    if (a.index != b.index) return a.index < b.index;
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.sign > b.sign; // plus before minus
  }
  std::string str(int label_base = 1) const; // "c1+", "f2-", ...
};

using WalkWord = std::vector<WalkLetter>;
std::string word_str(const WalkWord& w, int label_base = 1);

// Integer combination of mixed-letter words.  This is a presentation-layer
// container: the algebra product is defined on normal forms, not here.
class WalkElt {
public:
  WalkElt() = default;
  static WalkElt from_word(const WalkWord& w) {
    WalkElt e;
    e.add(w, 1);
    return e;
  }
  void add(const WalkWord& w, Int coeff);
  const std::map<WalkWord, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  friend bool operator==(const WalkElt& a, const WalkElt& b) { return a.terms_ == b.terms_; }

private:
  std::map<WalkWord, Int> terms_;
};

// An element written in the basis of plus-letter monomials.  Keys are words
// over {c_i^+, f_i^+}, byte-encoded for speed: one byte per letter,
// (index << 1) | (gen == F).
class FreeNormalForm {
public:
  FreeNormalForm() = default;
  static FreeNormalForm unit() {
    FreeNormalForm n;
    n.terms_[std::string()] = 1;
    return n;
  }

  void add(const std::string& encoded_word, Int coeff);
  const std::map<std::string, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const FreeNormalForm& a, const FreeNormalForm& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const FreeNormalForm& a, const FreeNormalForm& b) { return !(a == b); }
  friend bool operator<(const FreeNormalForm& a, const FreeNormalForm& b) {
    return a.terms_ < b.terms_;
  }
  FreeNormalForm& operator+=(const FreeNormalForm& o);
  friend FreeNormalForm operator*(const FreeNormalForm& a, const FreeNormalForm& b);

  static std::string encode_letter(Gen g, int index);
  static WalkWord decode_word(const std::string& encoded); // all-plus letters
  std::string str() const;

private:
  std::map<std::string, Int> terms_;
};

// Rewrite into the plus-letter basis.  Linear, multiplicative, idempotent
// on plus-letter words.
FreeNormalForm normal_form(const WalkWord& w);
FreeNormalForm normal_form(const WalkElt& e);

// The oriented basis word L(tau <= sigma, A): letter k is c (kept) or f
// (dropped) at index sigma_k, with sign sgn_A(-tau_1...tau_k(alpha_sigma_k)).
WalkWord oriented_word(const RootSystem& rs, const Subexpression& tau, const Orientation& A);

// kappa = dropped positions; zeta_plus/minus = kept positions whose letter
// sign under A is +/-.  kappa + zeta_plus + zeta_minus = length.
struct FoldStats {
  int kappa;
  int zeta_plus;
  int zeta_minus;
};
FoldStats fold_statistics(const RootSystem& rs, const Subexpression& tau, const Orientation& A);

// Subexpressions rho <= tau that are distinguished for the pair of
// orientations (A, Aprime): at every position where rho drops a letter tau
// keeps, the A-sign seen along tau equals the Aprime-sign seen along rho.
// Computed by the branch recursion; ascending mask order.
std::vector<Subexpression> distinguished(const RootSystem& rs, const Subexpression& tau,
                                         const Orientation& A, const Orientation& Aprime);
// Same set by direct filtering of all subexpressions of tau -- the
// independent oracle the recursion is tested against.
std::vector<Subexpression> distinguished_bruteforce(const RootSystem& rs,
                                                    const Subexpression& tau,
                                                    const Orientation& A,
                                                    const Orientation& Aprime);

// Positions (0-based) where both rho and tau drop and the two sign
// functions disagree; the parity of this set is the coefficient sign in the
// change of basis.  Requires rho <= tau.
std::vector<int> sign_change_set(const RootSystem& rs, const Subexpression& rho,
                                 const Subexpression& tau, const Orientation& A,
                                 const Orientation& Aprime);

// L(tau <= sigma, A) expanded in the A'-basis:
//   L(tau, A) = sum over distinguished rho of (-1)^{|sign_change_set|} L(rho, A').
struct ChangeOfBasisTerm {
  Subexpression rho;
  int sign; // +1 or -1
  WalkWord word;
};
struct ChangeOfBasis {
  WalkWord lhs;
  std::vector<ChangeOfBasisTerm> terms; // ascending mask order
  WalkElt as_walk_elt() const;
};
ChangeOfBasis change_of_basis(const RootSystem& rs, const Subexpression& tau,
                              const Orientation& A, const Orientation& Aprime);

} // namespace heckewalks

#endif
