#include "heckewalks/hecke.hpp"

#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

void HeckeElt::add(const WeylElt& w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto it = terms_.find(w);
  if (it == terms_.end()) {
    terms_.emplace(w, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly HeckeElt::coeff(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly::zero() : it->second;
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

HeckeElt operator*(const LaurentPoly& p, const HeckeElt& h) {
  HeckeElt r;
  if (p.is_zero()) return r;
  for (const auto& [w, q] : h.terms_) r.add(w, p * q);
  return r;
}

std::string HeckeElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, p] : terms_) {
    if (!first) out << " + ";
    Expression rw = reduced_word(w);
    out << "(" << p.str() << ")*T[";
    for (size_t k = 0; k < rw.letters.size(); ++k) {
      if (k) out << ",";
      out << rw.letters[k];
    }
    out << "]";
    first = false;
  }
  return out.str();
}

HeckeElt mul_gen(const HeckeElt& h, int i, int exponent) {
  if (exponent != 1 && exponent != -1) throw DomainError("generator exponent must be +1 or -1");
  HeckeElt r;
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  for (const auto& [w, p] : h.terms()) {
    validate_generator_index(w.system(), i);
    WeylElt ws = mul(w, WeylElt::simple(w.system(), i));
    bool ascends = length(ws) > length(w);
    if (exponent == 1) {
      // T_w T_i = T_{ws}              if l goes up
      //         = T_{ws} + (v-v^{-1}) T_w  otherwise
      r.add(ws, p);
      if (!ascends) r.add(w, vm * p);
    } else {
      // T_w T_i^{-1} = T_{ws} - (v-v^{-1}) T_w  if l goes up
      //              = T_{ws}                   otherwise
      r.add(ws, p);
      if (ascends) r.add(w, -(vm * p));
    }
  }
  return r;
}

HeckeElt word_product(const RootSystem& rs, const Expression& word,
                      const std::vector<int>& exponents) {
  if (exponents.size() != word.letters.size())
    throw DomainError("exponent list length does not match word length");
  HeckeElt h = HeckeElt::unit(rs);
  for (size_t k = 0; k < word.letters.size(); ++k)
    h = mul_gen(h, word.letters[k], exponents[k]);
  return h;
}

HeckeElt word_product(const RootSystem& rs, const Expression& word) {
  return word_product(rs, word, std::vector<int>(word.letters.size(), 1));
}

HeckeElt walk_to_hecke(const RootSystem& rs, const WalkWord& w) {
  HeckeElt h = HeckeElt::unit(rs);
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  for (const WalkLetter& l : w) {
    if (l.gen == Gen::C) {
      h = mul_gen(h, l.index, l.sign);
    } else {
      validate_generator_index(rs, l.index);
      h = (l.sign > 0 ? vm : -vm) * h;
    }
  }
  return h;
}

HeckeElt walk_to_hecke(const RootSystem& rs, const WalkElt& e) {
  HeckeElt h;
  for (const auto& [w, c] : e.terms()) h += LaurentPoly::monomial(0, c) * walk_to_hecke(rs, w);
  return h;
}

HeckeElt oriented_basis(const RootSystem& rs, const Subexpression& tau, const Orientation& A) {
  return walk_to_hecke(rs, oriented_word(rs, tau, A));
}

HeckeElt oriented_basis(const WeylElt& w, const Orientation& A) {
  const RootSystem& rs = w.system();
  return oriented_basis(rs, Subexpression::full(reduced_word(w)), A);
}

std::map<WeylElt, LaurentPoly> r_polynomial_row(const WeylElt& w) {
  const RootSystem& rs = w.system();
  Expression sigma = reduced_word(w);
  Orientation std_o = Orientation::standard(rs);
  Orientation neg_o = std_o.negated();
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  std::map<WeylElt, LaurentPoly> row;
  for (const Subexpression& tau : distinguished(rs, Subexpression::full(sigma), std_o, neg_o)) {
    FoldStats st = fold_statistics(rs, tau, neg_o);
    WeylElt u = product(rs, tau);
    LaurentPoly term = LaurentPoly::monomial(sigma.length() - length(u), 1) * vm.pow(static_cast<unsigned>(st.kappa));
    auto it = row.find(u);
    if (it == row.end())
      row.emplace(u, term);
    else
      it->second += term;
  }
  return row;
}

LaurentPoly r_polynomial(const WeylElt& u, const WeylElt& w) {
  if (!u.system().compatible(w.system()))
    throw DomainError("elements belong to different root systems");
  auto row = r_polynomial_row(w);
  auto it = row.find(u);
  return it == row.end() ? LaurentPoly::zero() : it->second;
}

std::map<WeylElt, LaurentPoly> r_polynomial_row_bar_oracle(const WeylElt& w) {
  const RootSystem& rs = w.system();
  Expression sigma = reduced_word(w);
  // bar is a ring automorphism with bar(T_i) = T_i^{-1}, so
  // bar(T_w) = T_{i_1}^{-1} ... T_{i_r}^{-1} in word order.
  HeckeElt barw = HeckeElt::unit(rs);
  for (int i : sigma.letters) barw = mul_gen(barw, i, -1);
  // Reading the expansion bar(T_w) = sum_u d_u T_u, the R-polynomial is
  // R_{u,w} = v^{l(w)-l(u)} bar(d_u).
  std::map<WeylElt, LaurentPoly> row;
  for (const auto& [u, d] : barw.terms()) {
    LaurentPoly r = LaurentPoly::monomial(sigma.length() - length(u), 1) * d.bar();
    if (!r.is_zero()) row.emplace(u, r);
  }
  return row;
}

std::map<WeylElt, LaurentPoly> point_count_row(const RootSystem& rs, const Expression& sigma,
                                               const Orientation& Aprime) {
  if (!is_reduced(rs, sigma)) throw DomainError("point counts require a reduced expression");
  Orientation std_o = Orientation::standard(rs);
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  // accumulate both forms per product u, then compare
  std::map<WeylElt, LaurentPoly> direct; // sum v^{2 zeta+} (v^2-1)^kappa
  std::map<WeylElt, LaurentPoly> folded; // sum (v-v^{-1})^kappa
  LaurentPoly v2m1 = LaurentPoly::monomial(2, 1) - LaurentPoly::one();
  for (const Subexpression& tau :
       distinguished(rs, Subexpression::full(sigma), std_o, Aprime)) {
    FoldStats st = fold_statistics(rs, tau, Aprime);
    WeylElt u = product(rs, tau);
    direct[u] += LaurentPoly::monomial(2 * st.zeta_plus, 1) * v2m1.pow(static_cast<unsigned>(st.kappa));
    folded[u] += vm.pow(static_cast<unsigned>(st.kappa));
  }
  std::map<WeylElt, LaurentPoly> out;
  for (const auto& [u, p] : direct) {
    LaurentPoly closed =
        LaurentPoly::monomial(sigma.length() + static_cast<int>(oriented_length(Aprime, u).value()), 1) *
        folded.at(u);
    if (!(closed == p))
      throw DomainError("internal error: point-count closed form disagrees with direct sum");
    out.emplace(u, p.substitute_q(+1));
  }
  return out;
}

LaurentPoly point_count(const RootSystem& rs, const Expression& sigma, const Orientation& Aprime,
                        const WeylElt& u) {
  auto row = point_count_row(rs, sigma, Aprime);
  auto it = row.find(u);
  return it == row.end() ? LaurentPoly::zero() : it->second;
}

} // namespace heckewalks
