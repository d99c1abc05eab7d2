#include "heckewalks/walk.hpp"

#include <algorithm>
#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

std::string WalkLetter::str(int label_base) const {
  std::string s(gen == Gen::C ? "c" : "f");
  s += std::to_string(index + label_base);
  s += sign > 0 ? '+' : '-';
  return s;
}

std::string word_str(const WalkWord& w, int label_base) {
  if (w.empty()) return "1";
  std::string s;
  for (size_t k = 0; k < w.size(); ++k) {
    if (k) s += " ";
    s += w[k].str(label_base);
  }
  return s;
}

void WalkElt::add(const WalkWord& w, Int coeff) {
  auto it = terms_.find(w);
  Int s = (it == terms_.end() ? Int(0) : it->second) + coeff;
  if (s == Int(0)) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[w] = s;
  }
}

void FreeNormalForm::add(const std::string& encoded_word, Int coeff) {
  auto it = terms_.find(encoded_word);
  Int s = (it == terms_.end() ? Int(0) : it->second) + coeff;
  if (s == Int(0)) {
    if (it != terms_.end()) terms_.erase(it);
  } else {
    terms_[encoded_word] = s;
  }
}

FreeNormalForm& FreeNormalForm::operator+=(const FreeNormalForm& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

FreeNormalForm operator*(const FreeNormalForm& a, const FreeNormalForm& b) {
  FreeNormalForm r;
  for (const auto& [wa, ca] : a.terms_)
    for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
  return r;
}

std::string FreeNormalForm::encode_letter(Gen g, int index) {
  if (index < 0 || index > 126) throw DomainError("letter index out of encodable range");
  return std::string(1, static_cast<char>((index << 1) | (g == Gen::F ? 1 : 0)));
}

WalkWord FreeNormalForm::decode_word(const std::string& encoded) {
  WalkWord w;
  w.reserve(encoded.size());
  for (unsigned char b : encoded)
    w.push_back(WalkLetter{(b & 1) ? Gen::F : Gen::C, b >> 1, +1});
  return w;
}

std::string FreeNormalForm::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    long long v = c.value();
    if (first) {
      if (v < 0) out << "-";
    } else {
      out << (v < 0 ? " - " : " + ");
    }
    long long a = v < 0 ? -v : v;
    if (a != 1 || w.empty()) out << a;
    if (!w.empty()) {
      if (a != 1) out << "*";
      out << word_str(decode_word(w));
    }
    first = false;
  }
  return out.str();
}

FreeNormalForm normal_form(const WalkWord& w) {
  // Fold letters left to right, eliminating minus-letters as we go:
  // c^- = c^+ - f^+ doubles a term, f^- = -f^+ flips its sign.
  FreeNormalForm acc = FreeNormalForm::unit();
  for (const WalkLetter& l : w) {
    FreeNormalForm next;
    std::string c_byte = FreeNormalForm::encode_letter(Gen::C, l.index);
    std::string f_byte = FreeNormalForm::encode_letter(Gen::F, l.index);
    for (const auto& [word, coeff] : acc.terms()) {
      if (l.gen == Gen::C) {
        if (l.sign > 0) {
          next.add(word + c_byte, coeff);
        } else {
          next.add(word + c_byte, coeff);
          next.add(word + f_byte, -coeff);
        }
      } else {
        next.add(word + f_byte, l.sign > 0 ? coeff : -coeff);
      }
    }
    acc = std::move(next);
  }
  return acc;
}

FreeNormalForm normal_form(const WalkElt& e) {
  FreeNormalForm acc;
  for (const auto& [w, c] : e.terms()) {
    FreeNormalForm nf = normal_form(w);
    for (const auto& [word, coeff] : nf.terms()) acc.add(word, coeff * c);
  }
  return acc;
}

namespace {
void check_orientation_system(const RootSystem& rs, const Orientation& A) {
  if (!rs.compatible(A.system()))
    throw DomainError("orientation belongs to a different root system");
}
} // namespace

WalkWord oriented_word(const RootSystem& rs, const Subexpression& tau, const Orientation& A) {
  check_orientation_system(rs, A);
  validate_expression(rs, tau.expression());
  WalkWord out;
  out.reserve(static_cast<size_t>(tau.length()));
  WeylElt prod = WeylElt::identity(rs);
  for (int k = 0; k < tau.length(); ++k) {
    int i = tau.expression().letters[static_cast<size_t>(k)];
    bool kept = tau.kept(k);
    if (kept) prod = mul(prod, WeylElt::simple(rs, i));
    Root beta = act(prod, Root::simple(rs, i)).negated();
    out.push_back(WalkLetter{kept ? Gen::C : Gen::F, i, A.sgn(beta)});
  }
  return out;
}

FoldStats fold_statistics(const RootSystem& rs, const Subexpression& tau, const Orientation& A) {
  FoldStats st{0, 0, 0};
  for (const WalkLetter& l : oriented_word(rs, tau, A)) {
    if (l.gen == Gen::F)
      ++st.kappa;
    else if (l.sign > 0)
      ++st.zeta_plus;
    else
      ++st.zeta_minus;
  }
  return st;
}

namespace {

struct DistinguishedSearch {
  const RootSystem& rs;
  const Subexpression& tau;
  std::vector<std::uint64_t> found;

  // Walk positions left to right.  The orientations carried down are the
  // originals twisted by the inverse of the processed prefix of tau (for
  // the lower one) and of rho (for the upper one); position k then sees
  // exactly the sign conditions of the global definition.
  void rec(int k, const Orientation& A, const Orientation& Ap, std::uint64_t mask) {
    if (k == tau.length()) {
      found.push_back(mask);
      return;
    }
    int i = tau.expression().letters[static_cast<size_t>(k)];
    if (!tau.kept(k)) {
      rec(k + 1, A, Ap, mask);
      return;
    }
    WeylElt s = WeylElt::simple(rs, i);
    Root alpha = Root::simple(rs, i);
    std::uint64_t bit = std::uint64_t{1} << (tau.length() - 1 - k);
    // keeping the letter is always allowed
    rec(k + 1, Orientation::twisted(s, A), Orientation::twisted(s, Ap), mask | bit);
    // dropping it requires sgn_A(-s(alpha_i)) == sgn_Ap(-alpha_i),
    // equivalently that the two orientations disagree on alpha_i
    if (A.sgn(alpha) != Ap.sgn(alpha)) rec(k + 1, Orientation::twisted(s, A), Ap, mask);
  }
};

} // namespace

std::vector<Subexpression> distinguished(const RootSystem& rs, const Subexpression& tau,
                                         const Orientation& A, const Orientation& Aprime) {
  check_orientation_system(rs, A);
  check_orientation_system(rs, Aprime);
  validate_expression(rs, tau.expression());
  DistinguishedSearch search{rs, tau, {}};
  search.rec(0, A, Aprime, 0);
  std::sort(search.found.begin(), search.found.end());
  std::vector<Subexpression> out;
  out.reserve(search.found.size());
  for (std::uint64_t m : search.found) out.emplace_back(tau.expression(), m);
  return out;
}

std::vector<Subexpression> distinguished_bruteforce(const RootSystem& rs,
                                                    const Subexpression& tau,
                                                    const Orientation& A,
                                                    const Orientation& Aprime) {
  check_orientation_system(rs, A);
  check_orientation_system(rs, Aprime);
  std::vector<Subexpression> out;
  for (const Subexpression& rho : subexpressions(tau.expression())) {
    if (!rho.refines(tau)) continue;
    bool ok = true;
    WeylElt tau_prod = WeylElt::identity(rs);
    WeylElt rho_prod = WeylElt::identity(rs);
    for (int k = 0; k < tau.length() && ok; ++k) {
      int i = tau.expression().letters[static_cast<size_t>(k)];
      WeylElt s = WeylElt::simple(rs, i);
      if (tau.kept(k)) tau_prod = mul(tau_prod, s);
      if (rho.kept(k)) rho_prod = mul(rho_prod, s);
      if (tau.kept(k) && !rho.kept(k)) {
        Root alpha = Root::simple(rs, i);
        ok = A.sgn(act(tau_prod, alpha).negated()) == Aprime.sgn(act(rho_prod, alpha).negated());
      }
    }
    if (ok) out.push_back(rho);
  }
  return out;
}

std::vector<int> sign_change_set(const RootSystem& rs, const Subexpression& rho,
                                 const Subexpression& tau, const Orientation& A,
                                 const Orientation& Aprime) {
  if (!rho.refines(tau))
    throw DomainError("sign_change_set: first subexpression does not refine the second");
  check_orientation_system(rs, A);
  check_orientation_system(rs, Aprime);
  std::vector<int> out;
  WeylElt tau_prod = WeylElt::identity(rs);
  WeylElt rho_prod = WeylElt::identity(rs);
  for (int k = 0; k < tau.length(); ++k) {
    int i = tau.expression().letters[static_cast<size_t>(k)];
    WeylElt s = WeylElt::simple(rs, i);
    if (tau.kept(k)) tau_prod = mul(tau_prod, s);
    if (rho.kept(k)) rho_prod = mul(rho_prod, s);
    if (!tau.kept(k)) {
      Root alpha = Root::simple(rs, i);
      if (A.sgn(act(tau_prod, alpha).negated()) != Aprime.sgn(act(rho_prod, alpha).negated()))
        out.push_back(k);
    }
  }
  return out;
}

WalkElt ChangeOfBasis::as_walk_elt() const {
  WalkElt e;
  for (const ChangeOfBasisTerm& t : terms) e.add(t.word, Int(t.sign));
  return e;
}

ChangeOfBasis change_of_basis(const RootSystem& rs, const Subexpression& tau,
                              const Orientation& A, const Orientation& Aprime) {
  ChangeOfBasis out;
  out.lhs = oriented_word(rs, tau, A);
  for (const Subexpression& rho : distinguished(rs, tau, A, Aprime)) {
    int parity = static_cast<int>(sign_change_set(rs, rho, tau, A, Aprime).size()) % 2;
    out.terms.push_back(
        ChangeOfBasisTerm{rho, parity == 0 ? 1 : -1, oriented_word(rs, rho, Aprime)});
  }
  return out;
}

} // namespace heckewalks
