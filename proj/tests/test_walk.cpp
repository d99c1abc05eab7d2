#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "heckewalks/affine_system.hpp"
#include "heckewalks/error.hpp"
#include "heckewalks/walk.hpp"
#include "helpers.hpp"

using namespace heckewalks;
using heckewalks::testing::all_expressions_up_to;
using heckewalks::testing::orientation_pool;

namespace {
RootSystem a1() { return RootSystem::from_cartan({{2}}); }
RootSystem a2() { return RootSystem::from_cartan({{2, -1}, {-1, 2}}); }
RootSystem b2() { return RootSystem::from_cartan({{2, -1}, {-2, 2}}); }

WalkLetter C(int i, int s) { return WalkLetter{Gen::C, i, s}; }
WalkLetter F(int i, int s) { return WalkLetter{Gen::F, i, s}; }

FreeNormalForm nf_of(std::initializer_list<std::pair<WalkWord, long long>> terms) {
  FreeNormalForm n;
  for (const auto& [w, c] : terms) {
    std::string key;
    for (const WalkLetter& l : w) key += FreeNormalForm::encode_letter(l.gen, l.index);
    n.add(key, Int(c));
  }
  return n;
}

std::mt19937 rng(424242);

WalkWord random_word(int rank, int len) {
  std::uniform_int_distribution<int> gen(0, 1), idx(0, rank - 1), sgn(0, 1);
  WalkWord w;
  for (int k = 0; k < len; ++k)
    w.push_back(WalkLetter{gen(rng) ? Gen::C : Gen::F, idx(rng), sgn(rng) ? 1 : -1});
  return w;
}
} // namespace

TEST_CASE("letter and word display") {
  CHECK(C(0, +1).str() == "c1+");
  CHECK(F(1, -1).str() == "f2-");
  CHECK(F(0, -1).str(0) == "f0-");
  CHECK(word_str({C(0, -1), C(1, +1), F(0, -1)}) == "c1- c2+ f1-");
  CHECK(word_str({}) == "1");
}

TEST_CASE("walk elements drop zero coefficients") {
  WalkElt e;
  WalkWord w{C(0, 1)};
  e.add(w, 2);
  e.add(w, -2);
  CHECK(e.is_zero());
  e.add(w, 1);
  CHECK(e == WalkElt::from_word(w));
}

TEST_CASE("normal form: defining relations") {
  // c1- -> c1+ - f1+
  CHECK(normal_form(WalkWord{C(0, -1)}) ==
        nf_of({{{C(0, 1)}, 1}, {{F(0, 1)}, -1}}));
  // f1- f2- -> f1+ f2+
  CHECK(normal_form(WalkWord{F(0, -1), F(1, -1)}) == nf_of({{{F(0, 1), F(1, 1)}, 1}}));
  // c1- c2- -> c1+c2+ - c1+f2+ - f1+c2+ + f1+f2+
  CHECK(normal_form(WalkWord{C(0, -1), C(1, -1)}) ==
        nf_of({{{C(0, 1), C(1, 1)}, 1},
               {{C(0, 1), F(1, 1)}, -1},
               {{F(0, 1), C(1, 1)}, -1},
               {{F(0, 1), F(1, 1)}, 1}}));
  // plus-letter words are fixed points
  WalkWord plus{C(0, 1), F(1, 1), C(1, 1)};
  CHECK(normal_form(plus) == nf_of({{plus, 1}}));
}

TEST_CASE("normal form is linear and multiplicative") {
  for (int trial = 0; trial < 200; ++trial) {
    WalkWord x = random_word(2, trial % 5), y = random_word(2, (trial / 5) % 5);
    WalkWord xy = x;
    xy.insert(xy.end(), y.begin(), y.end());
    CHECK(normal_form(xy) == normal_form(x) * normal_form(y));
  }
  // linearity through WalkElt
  WalkElt e;
  WalkWord a{C(0, -1)}, b{F(0, -1)};
  e.add(a, 3);
  e.add(b, -1);
  // 3 (c-) - (f-) = 3 (c+ - f+) + f+ = 3 c+ - 2 f+
  FreeNormalForm expect = nf_of({{{C(0, 1)}, 3}, {{F(0, 1)}, -2}});
  CHECK(normal_form(e) == expect);
}

TEST_CASE("free normal form encoding round-trips") {
  std::string enc = FreeNormalForm::encode_letter(Gen::C, 5);
  enc += FreeNormalForm::encode_letter(Gen::F, 0);
  WalkWord dec = FreeNormalForm::decode_word(enc);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0] == C(5, 1));
  CHECK(dec[1] == F(0, 1));
  CHECK_THROWS_AS(FreeNormalForm::encode_letter(Gen::C, 127), DomainError);
  CHECK(FreeNormalForm::unit().str() == "1");
}

TEST_CASE("oriented words: worked three-letter example") {
  RootSystem rs = a2();
  Orientation A0 = Orientation::standard(rs);
  Orientation A = Orientation::twisted(WeylElt::simple(rs, 0), A0);
  Expression sigma{0, 1, 0};
  Subexpression tau(sigma, Subexpression::mask_from_string("110", 3));

  CHECK(oriented_word(rs, tau, A) == WalkWord{C(0, -1), C(1, 1), F(0, -1)});
  CHECK(word_str(oriented_word(rs, tau, A)) == "c1- c2+ f1-");

  // a kept reduced subexpression under the standard orientation never
  // produces a minus sign
  CHECK(oriented_word(rs, Subexpression::full(sigma), A0) ==
        WalkWord{C(0, 1), C(1, 1), C(0, 1)});
  CHECK(oriented_word(rs, Subexpression::full(Expression{}), A0).empty());
}

TEST_CASE("fold statistics in rank one") {
  RootSystem rs = a1();
  Orientation A0 = Orientation::standard(rs);
  Expression sigma{0};
  Subexpression dropped(sigma, 0), kept(sigma, 1);

  for (const Orientation& A : {A0, A0.negated()}) {
    FoldStats st = fold_statistics(rs, dropped, A);
    CHECK(st.kappa == 1);
    CHECK(st.zeta_plus == 0);
    CHECK(st.zeta_minus == 0);
  }
  FoldStats neg = fold_statistics(rs, kept, A0.negated());
  CHECK(neg.kappa == 0);
  CHECK(neg.zeta_plus == 0);
  CHECK(neg.zeta_minus == 1);
  FoldStats pos = fold_statistics(rs, kept, A0);
  CHECK(pos.kappa == 0);
  CHECK(pos.zeta_plus == 1);
  CHECK(pos.zeta_minus == 0);
}

TEST_CASE("distinguished subexpressions: small exact sets") {
  RootSystem rs1 = a1();
  Orientation A0 = Orientation::standard(rs1);
  auto both = distinguished(rs1, Subexpression::full(Expression{0}), A0, A0.negated());
  REQUIRE(both.size() == 2);
  CHECK(both[0].mask() == 0);
  CHECK(both[1].mask() == 1);

  RootSystem rs = a2();
  Orientation B0 = Orientation::standard(rs);
  auto self = distinguished(rs, Subexpression::full(Expression{0, 1, 0}), B0, B0);
  REQUIRE(self.size() == 1);
  CHECK(self[0].mask_string() == "111");

  // worked example: every subexpression of tau is distinguished
  Orientation A = Orientation::twisted(WeylElt::simple(rs, 0), B0);
  Orientation Ap = Orientation::twisted(product(rs, Expression{1, 0}), B0);
  Subexpression tau(Expression{0, 1, 0}, Subexpression::mask_from_string("110", 3));
  auto dist = distinguished(rs, tau, A, Ap);
  REQUIRE(dist.size() == 4);
  CHECK(dist[0].mask_string() == "000");
  CHECK(dist[1].mask_string() == "010");
  CHECK(dist[2].mask_string() == "100");
  CHECK(dist[3].mask_string() == "110");
}

TEST_CASE("distinguished recursion agrees with the filter oracle") {
  std::vector<std::pair<RootSystem, const AffineSystem*>> systems;
  AffineSystem aff = AffineSystem::from_finite({{2}});
  systems.emplace_back(a2(), nullptr);
  systems.emplace_back(b2(), nullptr);
  systems.emplace_back(aff.affine(), &aff);
  for (auto& [rs, affp] : systems) {
    auto pool = orientation_pool(rs, affp);
    for (const Expression& sigma : all_expressions_up_to(rs.rank(), 4)) {
      for (const Subexpression& tau : subexpressions(sigma)) {
        for (auto& [na, A] : pool) {
          for (auto& [nb, Ap] : pool) {
            CAPTURE(na);
            CAPTURE(nb);
            CHECK(distinguished(rs, tau, A, Ap) == distinguished_bruteforce(rs, tau, A, Ap));
          }
        }
      }
    }
  }
}

TEST_CASE("sign-change sets") {
  RootSystem rs = a2();
  Orientation A0 = Orientation::standard(rs);
  Orientation A = Orientation::twisted(WeylElt::simple(rs, 0), A0);
  Orientation Ap = Orientation::twisted(product(rs, Expression{1, 0}), A0);
  Expression sigma{0, 1, 0};
  Subexpression full = Subexpression::full(sigma);

  // no dropped positions: empty
  CHECK(sign_change_set(rs, full, full, A, Ap).empty());
  // identical subexpression, identical orientation: empty
  Subexpression tau(sigma, Subexpression::mask_from_string("110", 3));
  CHECK(sign_change_set(rs, tau, tau, A, A).empty());
  // worked example: rho = (e,e,e) gets coefficient +1, so |K| is even
  Subexpression rho(sigma, 0);
  CHECK(sign_change_set(rs, rho, tau, A, Ap).size() % 2 == 0);
  // rho must refine tau
  CHECK_THROWS_AS(sign_change_set(rs, Subexpression(sigma, 1), tau, A, Ap), DomainError);
}

TEST_CASE("change of basis: worked three-letter example, exact signs") {
  RootSystem rs = a2();
  Orientation A0 = Orientation::standard(rs);
  Orientation A = Orientation::twisted(WeylElt::simple(rs, 0), A0);
  Orientation Ap = Orientation::twisted(product(rs, Expression{1, 0}), A0);
  Subexpression tau(Expression{0, 1, 0}, Subexpression::mask_from_string("110", 3));

  ChangeOfBasis cb = change_of_basis(rs, tau, A, Ap);
  CHECK(cb.lhs == oriented_word(rs, tau, A));
  REQUIRE(cb.terms.size() == 4);
  std::map<std::string, int> signs;
  for (const auto& t : cb.terms) {
    signs[t.rho.mask_string()] = t.sign;
    CHECK(t.word == oriented_word(rs, t.rho, Ap));
  }
  CHECK(signs == std::map<std::string, int>{
                     {"000", +1}, {"010", -1}, {"100", -1}, {"110", -1}});
  // ascending mask order
  for (size_t k = 1; k < cb.terms.size(); ++k)
    CHECK(cb.terms[k - 1].rho.mask() < cb.terms[k].rho.mask());
}

TEST_CASE("change of basis at equal orientations is the identity") {
  RootSystem rs = b2();
  Orientation A0 = Orientation::standard(rs);
  Subexpression tau(Expression{0, 1, 0}, 0b101);
  ChangeOfBasis cb = change_of_basis(rs, tau, A0, A0);
  REQUIRE(cb.terms.size() == 1);
  CHECK(cb.terms[0].sign == 1);
  CHECK(cb.terms[0].rho == tau);
  CHECK(cb.terms[0].word == cb.lhs);
}

TEST_CASE("rank-one straightening: c+ = c- + f+") {
  RootSystem rs = a1();
  Orientation A0 = Orientation::standard(rs);
  Subexpression kept = Subexpression::full(Expression{0});
  ChangeOfBasis cb = change_of_basis(rs, kept, A0, A0.negated());
  REQUIRE(cb.terms.size() == 2);
  CHECK(cb.terms[0].rho.mask() == 0);
  CHECK(cb.terms[0].sign == 1);
  CHECK(cb.terms[1].rho.mask() == 1);
  CHECK(cb.terms[1].sign == 1);
  CHECK(normal_form(cb.as_walk_elt()) == normal_form(oriented_word(rs, kept, A0)));
}

TEST_CASE("straightening soundness on a moderate sweep") {
  AffineSystem aff = AffineSystem::from_finite({{2}});
  std::vector<std::pair<RootSystem, const AffineSystem*>> systems;
  systems.emplace_back(a2(), nullptr);
  systems.emplace_back(aff.affine(), &aff);
  for (auto& [rs, affp] : systems) {
    auto pool = orientation_pool(rs, affp);
    for (const Expression& sigma : all_expressions_up_to(rs.rank(), 3)) {
      for (const Subexpression& tau : subexpressions(sigma)) {
        FreeNormalForm lhs = normal_form(oriented_word(rs, tau, pool[2].second));
        for (auto& [name, Ap] : pool) {
          ChangeOfBasis cb = change_of_basis(rs, tau, pool[2].second, Ap);
          CHECK(normal_form(cb.as_walk_elt()) == lhs);
        }
      }
    }
  }
}

TEST_CASE("oriented words are linearly independent across subexpressions") {
  AffineSystem aff = AffineSystem::from_finite({{2}});
  std::vector<std::pair<RootSystem, const AffineSystem*>> systems;
  systems.emplace_back(a2(), nullptr);
  systems.emplace_back(b2(), nullptr);
  systems.emplace_back(aff.affine(), &aff);
  for (auto& [rs, affp] : systems) {
    for (auto& [name, A] : orientation_pool(rs, affp)) {
      CAPTURE(name);
      for (const Expression& sigma : all_expressions_up_to(rs.rank(), 6)) {
        std::set<FreeNormalForm> seen;
        bool distinct = true;
        for (const Subexpression& tau : subexpressions(sigma))
          distinct = seen.insert(normal_form(oriented_word(rs, tau, A))).second && distinct;
        CHECK(distinct);
      }
    }
  }
}

TEST_CASE("reversal bijection on translation fibers") {
  for (auto finite_cartan :
       std::vector<std::vector<std::vector<long long>>>{{{2}}, {{2, -1}, {-1, 2}}}) {
    AffineSystem aff = AffineSystem::from_finite(finite_cartan);
    const RootSystem& rs = aff.affine();
    Orientation A0 = Orientation::standard(rs);
    Orientation Am = Orientation::periodic(aff, -1);
    for (const Expression& sigma : all_expressions_up_to(rs.rank(), 5)) {
      if (!is_reduced(rs, sigma)) continue;
      Expression rev = sigma.reversed();
      auto D = distinguished(rs, Subexpression::full(sigma), A0, Am);
      auto Dr = distinguished(rs, Subexpression::full(rev), A0, Am);
      std::set<std::uint64_t> rev_masks;
      for (const Subexpression& t : Dr) rev_masks.insert(t.mask());
      std::map<std::vector<Int>, int> fibers, rev_fibers;
      for (const Subexpression& t : Dr) {
        AffineElt x = from_weyl(aff, product(rs, t));
        if (x.direction() == WeylElt::identity(aff.finite())) ++rev_fibers[x.weight()];
      }
      for (const Subexpression& tau : D) {
        AffineElt x = from_weyl(aff, product(rs, tau));
        if (!(x.direction() == WeylElt::identity(aff.finite()))) continue;
        ++fibers[x.weight()];
        Subexpression tau2 = tau.reversed();
        CHECK(rev_masks.count(tau2.mask()) == 1);
        AffineElt x2 = from_weyl(aff, product(rs, tau2));
        std::vector<Int> neg = x.weight();
        for (Int& c : neg) c = -c;
        CHECK(x2.direction() == WeylElt::identity(aff.finite()));
        CHECK(x2.weight() == neg);
        FoldStats s1 = fold_statistics(rs, tau, Am);
        FoldStats s2 = fold_statistics(rs, tau2, Am);
        CHECK(s1.kappa == s2.kappa);
        CHECK(s1.zeta_plus == s2.zeta_minus);
        CHECK(s1.zeta_minus == s2.zeta_plus);
      }
      // matching fiber sizes pin the bijection
      for (auto& [nu, count] : fibers) {
        std::vector<Int> neg = nu;
        for (Int& c : neg) c = -c;
        CHECK(rev_fibers[neg] == count);
      }
    }
  }
}
