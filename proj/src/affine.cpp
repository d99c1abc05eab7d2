#include "heckewalks/affine.hpp"

#include <sstream>

#include "heckewalks/error.hpp"

namespace heckewalks {

// --- GroupAlgebraElt -------------------------------------------------------

GroupAlgebraElt GroupAlgebraElt::monomial(std::vector<Int> lambda, LaurentPoly c) {
  GroupAlgebraElt g;
  if (!c.is_zero()) g.terms_.emplace(std::move(lambda), std::move(c));
  return g;
}

GroupAlgebraElt GroupAlgebraElt::one(const AffineSystem& aff) {
  return monomial(std::vector<Int>(static_cast<size_t>(aff.finite().rank()), Int(0)),
                  LaurentPoly::one());
}

void GroupAlgebraElt::add(const std::vector<Int>& lambda, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    terms_.emplace(lambda, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElt& GroupAlgebraElt::operator+=(const GroupAlgebraElt& o) {
  for (const auto& [l, c] : o.terms_) add(l, c);
  return *this;
}

GroupAlgebraElt& GroupAlgebraElt::operator-=(const GroupAlgebraElt& o) {
  for (const auto& [l, c] : o.terms_) add(l, -c);
  return *this;
}

GroupAlgebraElt operator*(const LaurentPoly& p, const GroupAlgebraElt& g) {
  GroupAlgebraElt r;
  if (p.is_zero()) return r;
  for (const auto& [l, c] : g.terms_) r.add(l, p * c);
  return r;
}

GroupAlgebraElt GroupAlgebraElt::shifted(const std::vector<Int>& mu) const {
  GroupAlgebraElt r;
  for (const auto& [l, c] : terms_) {
    std::vector<Int> s = l;
    if (s.size() != mu.size()) throw DomainError("weight length mismatch in shift");
    for (size_t k = 0; k < s.size(); ++k) s[k] += mu[k];
    r.terms_.emplace(std::move(s), c);
  }
  return r;
}

std::string GroupAlgebraElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [l, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*X[";
    for (size_t k = 0; k < l.size(); ++k) {
      if (k) out << ",";
      out << l[k].value();
    }
    out << "]";
    first = false;
  }
  return out.str();
}

// --- polynomial representation ---------------------------------------------

namespace {

std::vector<Int> reflect_weight(const AffineSystem& aff, int finite_i, const std::vector<Int>& l) {
  // s_i(lambda) = lambda - <lambda, alpha_i> alpha_i^vee on coroot coordinates
  Int m = aff.pair(l, Root::simple(aff.finite(), finite_i));
  std::vector<Int> r = l;
  r[static_cast<size_t>(finite_i)] -= m;
  return r;
}

// (X^lambda - X^{s_i lambda}) / (1 - X^{alpha_i^vee}), expanded exactly:
// a geometric sum with <lambda, alpha_i> terms (empty when the pairing is 0).
GroupAlgebraElt geometric_quotient(const AffineSystem& aff, int finite_i,
                                   const std::vector<Int>& lambda) {
  Int m = aff.pair(lambda, Root::simple(aff.finite(), finite_i));
  GroupAlgebraElt out;
  if (m == Int(0)) return out;
  long long steps = m.value() < 0 ? -m.value() : m.value();
  std::vector<Int> base = m > Int(0) ? reflect_weight(aff, finite_i, lambda) : lambda;
  LaurentPoly coeff = m > Int(0) ? -LaurentPoly::one() : LaurentPoly::one();
  std::vector<Int> cur = base;
  for (long long t = 0; t < steps; ++t) {
    out.add(cur, coeff);
    cur[static_cast<size_t>(finite_i)] += 1;
  }
  return out;
}

void check_weight_size(const AffineSystem& aff, const std::vector<Int>& l) {
  if (static_cast<int>(l.size()) != aff.finite().rank())
    throw DomainError("weight vector length does not match the finite rank");
}

} // namespace

GroupAlgebraElt polyrep_reflect(const AffineSystem& aff, int finite_i, const GroupAlgebraElt& f) {
  GroupAlgebraElt r;
  for (const auto& [l, c] : f.terms()) r.add(reflect_weight(aff, finite_i, l), c);
  return r;
}

GroupAlgebraElt polyrep_apply(const AffineSystem& aff, int i, int exponent,
                              const GroupAlgebraElt& f) {
  if (exponent != 1 && exponent != -1) throw DomainError("generator exponent must be +1 or -1");
  const int n = aff.finite().rank();
  if (i < 0 || i > n) throw DomainError("affine generator index out of range");
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  if (i >= 1) {
    int j = i - 1;
    GroupAlgebraElt out;
    const LaurentPoly v1 = LaurentPoly::monomial(1, 1);
    for (const auto& [l, c] : f.terms()) {
      out.add(reflect_weight(aff, j, l), v1 * c);
      out += c * (vm * geometric_quotient(aff, j, l));
    }
    if (exponent == -1) out -= vm * f;
    return out;
  }
  // affine node: T_0 = T_{s_theta}^{-1} X^{-theta^vee}, T_0^{-1} = X^{theta^vee} T_{s_theta}
  Expression st = reduced_word(aff.s_theta());
  if (exponent == 1) {
    std::vector<Int> neg = aff.theta_coroot();
    for (Int& v : neg) v = -v;
    GroupAlgebraElt g = f.shifted(neg);
    // T^{-1}_{s_theta} = T_{j_m}^{-1} ... T_{j_1}^{-1}; rightmost acts first.
    for (int j : st.letters) g = polyrep_apply(aff, j + 1, -1, g);
    return g;
  }
  GroupAlgebraElt g = f;
  for (auto it = st.letters.rbegin(); it != st.letters.rend(); ++it)
    g = polyrep_apply(aff, *it + 1, +1, g);
  return g.shifted(aff.theta_coroot());
}

// --- Macdonald specializations ----------------------------------------------

GroupAlgebraElt macdonald_direct(const AffineSystem& aff, const std::vector<Int>& lambda,
                                 Specialization which) {
  check_weight_size(aff, lambda);
  MinCosetRep rep = min_coset_rep(aff, lambda);
  int e = which == Specialization::AtInfinity ? 1 : -1;
  GroupAlgebraElt f = GroupAlgebraElt::one(aff);
  // operator product T_{i_1}^e ... T_{i_r}^e applied to 1: rightmost first
  for (auto it = rep.word.letters.rbegin(); it != rep.word.letters.rend(); ++it)
    f = polyrep_apply(aff, *it, e, f);
  return LaurentPoly::monomial(-length(rep.u_lambda), 1) * f;
}

GroupAlgebraElt macdonald_oriented(const AffineSystem& aff, const std::vector<Int>& lambda,
                                   Specialization which) {
  check_weight_size(aff, lambda);
  MinCosetRep rep = min_coset_rep(aff, lambda);
  const RootSystem& ars = aff.affine();
  Orientation std_o = Orientation::standard(ars);
  Orientation target = Orientation::periodic(aff, which == Specialization::AtInfinity ? 1 : -1);
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  GroupAlgebraElt sum;
  for (const Subexpression& tau :
       distinguished(ars, Subexpression::full(rep.word), std_o, target)) {
    FoldStats st = fold_statistics(ars, tau, target);
    AffineElt pi = AffineElt::identity(aff);
    for (int k = 0; k < tau.length(); ++k)
      if (tau.kept(k)) pi = affine_mul(aff, pi, AffineElt::simple(aff, tau.expression().letters[static_cast<size_t>(k)]));
    LaurentPoly coeff = vm.pow(static_cast<unsigned>(st.kappa));
    if (which == Specialization::AtZero) coeff = coeff.bar();
    coeff *= LaurentPoly::monomial(length(pi.direction()), 1);
    sum.add(pi.weight(), coeff);
  }
  return LaurentPoly::monomial(-length(rep.u_lambda), 1) * sum;
}

// --- Bernstein presentation ---------------------------------------------------

BernsteinElt BernsteinElt::unit(const AffineSystem& aff) {
  return X(aff, std::vector<Int>(static_cast<size_t>(aff.finite().rank()), Int(0)));
}

BernsteinElt BernsteinElt::X(const AffineSystem& aff, std::vector<Int> lambda) {
  check_weight_size(aff, lambda);
  BernsteinElt b;
  b.terms_.emplace(std::make_pair(std::move(lambda), WeylElt::identity(aff.finite())),
                   LaurentPoly::one());
  return b;
}

BernsteinElt BernsteinElt::T(const AffineSystem& aff, const WeylElt& u) {
  if (!u.system().compatible(aff.finite()))
    throw DomainError("Bernstein T-part must lie in the finite Weyl group");
  BernsteinElt b;
  b.terms_.emplace(
      std::make_pair(std::vector<Int>(static_cast<size_t>(aff.finite().rank()), Int(0)), u),
      LaurentPoly::one());
  return b;
}

void BernsteinElt::add(const std::vector<Int>& lambda, const WeylElt& u, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(lambda, u);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

BernsteinElt& BernsteinElt::operator+=(const BernsteinElt& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
  return *this;
}

BernsteinElt& BernsteinElt::operator-=(const BernsteinElt& o) {
  for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
  return *this;
}

BernsteinElt operator*(const LaurentPoly& p, const BernsteinElt& h) {
  BernsteinElt r;
  if (p.is_zero()) return r;
  for (const auto& [k, c] : h.terms_) r.add(k.first, k.second, p * c);
  return r;
}

std::string BernsteinElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) out << " + ";
    out << "(" << c.str() << ")*X[";
    for (size_t t = 0; t < k.first.size(); ++t) {
      if (t) out << ",";
      out << k.first[t].value();
    }
    out << "]T[";
    Expression rw = reduced_word(k.second);
    if (rw.letters.empty()) out << "e";
    for (size_t t = 0; t < rw.letters.size(); ++t) {
      if (t) out << ",";
      out << rw.letters[t] + k.second.system().label_base();
    }
    out << "]";
    first = false;
  }
  return out.str();
}

namespace {

// T_u X^mu rewritten into the Bernstein basis, by peeling one generator at
// a time through the commutation relation
//   T_j X^mu = X^{s_j mu} T_j + (v - v^{-1}) (X^mu - X^{s_j mu})/(1 - X^{alpha_j^vee}).
BernsteinElt commute_T_past_X(const AffineSystem& aff, const WeylElt& u,
                              const std::vector<Int>& mu);

// (Bernstein element) * T_j^{+-1} for a finite index j, via the Hecke
// relation on the T-part only.
BernsteinElt mul_finite_T(const AffineSystem& aff, const BernsteinElt& a, int finite_j,
                          int exponent) {
  BernsteinElt r;
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  for (const auto& [k, c] : a.terms()) {
    const auto& [lam, w] = k;
    WeylElt ws = mul(w, WeylElt::simple(aff.finite(), finite_j));
    bool ascends = length(ws) > length(w);
    if (exponent == 1) {
      r.add(lam, ws, c);
      if (!ascends) r.add(lam, w, vm * c);
    } else {
      r.add(lam, ws, c);
      if (ascends) r.add(lam, w, -(vm * c));
    }
  }
  return r;
}

BernsteinElt commute_T_past_X(const AffineSystem& aff, const WeylElt& u,
                              const std::vector<Int>& mu) {
  Expression word = reduced_word(u);
  if (word.length() == 0) return BernsteinElt::X(aff, mu);
  // u = u' s_j with the last letter j
  int j = word.letters.back();
  Expression head(std::vector<int>(word.letters.begin(), word.letters.end() - 1));
  WeylElt uprime = product(aff.finite(), head);
  // T_u X^mu = T_{u'} (T_j X^mu)
  BernsteinElt out =
      mul_finite_T(aff, commute_T_past_X(aff, uprime, reflect_weight(aff, j, mu)), j, +1);
  GroupAlgebraElt quot = geometric_quotient(aff, j, mu);
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  for (const auto& [nu, c] : quot.terms())
    out += (vm * c) * commute_T_past_X(aff, uprime, nu);
  return out;
}

} // namespace

BernsteinElt bernstein_mul_X(const AffineSystem& aff, const BernsteinElt& a,
                             const std::vector<Int>& mu) {
  check_weight_size(aff, mu);
  BernsteinElt r;
  for (const auto& [k, c] : a.terms()) {
    const auto& [lam, w] = k;
    BernsteinElt moved = commute_T_past_X(aff, w, mu);
    for (const auto& [mk, mc] : moved.terms()) {
      std::vector<Int> shifted = mk.first;
      for (size_t t = 0; t < shifted.size(); ++t) shifted[t] += lam[t];
      r.add(shifted, mk.second, c * mc);
    }
  }
  return r;
}

BernsteinElt bernstein_mul_T(const AffineSystem& aff, const BernsteinElt& a, int j,
                             int exponent) {
  if (j < 1 || j > aff.finite().rank())
    throw DomainError("bernstein_mul_T expects a finite generator (affine index >= 1)");
  if (exponent != 1 && exponent != -1) throw DomainError("generator exponent must be +1 or -1");
  return mul_finite_T(aff, a, j - 1, exponent);
}

BernsteinElt bernstein_mul_gen(const AffineSystem& aff, const BernsteinElt& a, int i,
                               int exponent) {
  if (exponent != 1 && exponent != -1) throw DomainError("generator exponent must be +1 or -1");
  if (i != 0) return bernstein_mul_T(aff, a, i, exponent);
  Expression st = reduced_word(aff.s_theta());
  if (exponent == 1) {
    // T_0 = T_{s_theta}^{-1} X^{-theta^vee}
    BernsteinElt r = a;
    for (auto it = st.letters.rbegin(); it != st.letters.rend(); ++it)
      r = mul_finite_T(aff, r, *it, -1);
    std::vector<Int> neg = aff.theta_coroot();
    for (Int& v : neg) v = -v;
    return bernstein_mul_X(aff, r, neg);
  }
  // T_0^{-1} = X^{theta^vee} T_{s_theta}
  BernsteinElt r = bernstein_mul_X(aff, a, aff.theta_coroot());
  for (int j : st.letters) r = mul_finite_T(aff, r, j, +1);
  return r;
}

BernsteinElt bernstein_mul(const AffineSystem& aff, const BernsteinElt& a, const BernsteinElt& b) {
  BernsteinElt r;
  for (const auto& [k, c] : b.terms()) {
    const auto& [mu, w] = k;
    BernsteinElt t = bernstein_mul_X(aff, a, mu);
    for (int j : reduced_word(w).letters) t = mul_finite_T(aff, t, j, +1);
    r += c * t;
  }
  return r;
}

BernsteinElt bernstein_word_product(const AffineSystem& aff, const Expression& word,
                                    const std::vector<int>& exponents) {
  if (exponents.size() != word.letters.size())
    throw DomainError("exponent list length does not match word length");
  BernsteinElt r = BernsteinElt::unit(aff);
  for (size_t k = 0; k < word.letters.size(); ++k)
    r = bernstein_mul_gen(aff, r, word.letters[k], exponents[k]);
  return r;
}

BernsteinElt bernstein_oriented(const AffineSystem& aff, const AffineElt& x) {
  Expression word = to_word(aff, x);
  WalkWord walk = oriented_word(aff.affine(), Subexpression::full(word),
                                Orientation::periodic(aff, +1));
  BernsteinElt r = BernsteinElt::unit(aff);
  for (const WalkLetter& l : walk) r = bernstein_mul_gen(aff, r, l.index, l.sign);
  // the result must be the single basis element X^{weight} T_{direction}
  BernsteinElt expected;
  expected.add(x.weight(), x.direction(), LaurentPoly::one());
  if (!(r == expected))
    throw DomainError("internal error: oriented Bernstein element is not X^wt T_dir");
  return r;
}

BernsteinElt bernstein_of_T_fold(const AffineSystem& aff, const WeylElt& w) {
  Expression word = reduced_word(w);
  return bernstein_word_product(aff, word, std::vector<int>(word.letters.size(), 1));
}

BernsteinElt bernstein_of_T_oriented_sum(const AffineSystem& aff, const WeylElt& w) {
  const RootSystem& ars = aff.affine();
  if (!w.system().compatible(ars))
    throw DomainError("element does not belong to the affine Weyl group of this system");
  Expression sigma = reduced_word(w);
  Orientation std_o = Orientation::standard(ars);
  Orientation inf_o = Orientation::periodic(aff, +1);
  const LaurentPoly vm = LaurentPoly::v_minus_vinv();
  BernsteinElt sum;
  for (const Subexpression& tau :
       distinguished(ars, Subexpression::full(sigma), std_o, inf_o)) {
    FoldStats st = fold_statistics(ars, tau, inf_o);
    AffineElt pi = AffineElt::identity(aff);
    for (int k = 0; k < tau.length(); ++k)
      if (tau.kept(k))
        pi = affine_mul(aff, pi, AffineElt::simple(aff, tau.expression().letters[static_cast<size_t>(k)]));
    sum.add(pi.weight(), pi.direction(), vm.pow(static_cast<unsigned>(st.kappa)));
  }
  return sum;
}

} // namespace heckewalks
