#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "heckewalks/affine_system.hpp"
#include "heckewalks/coxeter.hpp"
#include "heckewalks/error.hpp"
#include "helpers.hpp"

using namespace heckewalks;
using heckewalks::testing::all_expressions_up_to;
using heckewalks::testing::bruhat_leq_subword_oracle;
using heckewalks::testing::random_element;

namespace {
RootSystem a2() { return RootSystem::from_cartan({{2, -1}, {-1, 2}}); }
RootSystem b2() { return RootSystem::from_cartan({{2, -1}, {-2, 2}}); }
RootSystem a1_affine() { return AffineSystem::from_finite({{2}}).affine(); }
} // namespace

TEST_CASE("Cartan matrix validation distinguishes failure modes") {
  using heckewalks::testing::throws_with;
  CHECK_THROWS_AS(RootSystem::from_cartan({}), ParseError);
  CHECK(throws_with<ParseError>([] { RootSystem::from_cartan({{2, -1}}); }, "not square"));
  CHECK(throws_with<ParseError>([] { RootSystem::from_cartan({{1}}); }, "must be 2"));
  CHECK(throws_with<ParseError>([] { RootSystem::from_cartan({{2, 1}, {-1, 2}}); }, "positive"));
  CHECK(throws_with<ParseError>([] { RootSystem::from_cartan({{2, 0}, {-1, 2}}); }, "asymmetric"));
  CHECK_NOTHROW(RootSystem::from_cartan({{2, -1}, {-3, 2}}));
}

TEST_CASE("roots reject mixed-sign or zero coordinate vectors") {
  RootSystem rs = a2();
  CHECK_NOTHROW(Root(rs, {Int(1), Int(1)}));
  CHECK_NOTHROW(Root(rs, {Int(0), Int(-2)}));
  CHECK_THROWS_AS(Root(rs, {Int(1), Int(-1)}), DomainError);
  CHECK_THROWS_AS(Root(rs, {Int(0), Int(0)}), DomainError);
  CHECK_THROWS_AS(Root(rs, {Int(1)}), DomainError); // wrong rank
  CHECK(Root(rs, {Int(1), Int(2)}).str() == "a1+2a2");
  CHECK(Root(rs, {Int(-1), Int(0)}).str() == "-a1");
}

TEST_CASE("simple reflections act by the Cartan rule") {
  RootSystem rs = a2();
  Root a1 = Root::simple(rs, 0), a2r = Root::simple(rs, 1);
  CHECK(reflect(rs, 0, a2r) == Root(rs, {Int(1), Int(1)}));
  CHECK(reflect(rs, 0, a1) == a1.negated());
  CHECK(reflect(rs, 1, a2r) == a2r.negated());
  // involutive
  CHECK(reflect(rs, 0, reflect(rs, 0, a2r)) == a2r);

  RootSystem aff = a1_affine();
  // s_0(a_1) = a_1 + 2 a_0
  CHECK(reflect(aff, 0, Root::simple(aff, 1)) == Root(aff, {Int(2), Int(1)}));
}

TEST_CASE("group operations: mul, inv, act") {
  RootSystem rs = a2();
  WeylElt s1 = WeylElt::simple(rs, 0), s2 = WeylElt::simple(rs, 1);
  CHECK(mul(s1, s1) == WeylElt::identity(rs));
  CHECK(inv(mul(s1, s2)) == mul(s2, s1));
  CHECK(act(mul(s1, s2), Root::simple(rs, 0)) == Root::simple(rs, 1));
  // braid relation holds on matrices
  CHECK(mul(mul(s1, s2), s1) == mul(mul(s2, s1), s2));

  // elements of incompatible systems do not mix
  RootSystem other = b2();
  CHECK_THROWS_AS(mul(s1, WeylElt::simple(other, 0)), DomainError);
  // ... but elements of a distinct system with equal Cartan data do
  RootSystem clone = a2();
  CHECK(rs.compatible(clone));
  CHECK(mul(s1, WeylElt::simple(clone, 0)) == WeylElt::identity(rs));
}

TEST_CASE("length by iterated descent") {
  RootSystem rs = a2();
  CHECK(length(WeylElt::identity(rs)) == 0);
  CHECK(length(product(rs, Expression{0, 1, 0})) == 3);
  CHECK(length(product(rs, Expression{0, 0})) == 0);
  RootSystem aff = a1_affine();
  CHECK(length(product(aff, Expression{0, 1, 0, 1})) == 4);
}

TEST_CASE("canonical reduced words take the smallest descent") {
  RootSystem rs = a2();
  CHECK(reduced_word(WeylElt::identity(rs)) == Expression{});
  CHECK(reduced_word(product(rs, Expression{0, 1, 0})) == Expression{0, 1, 0});
  CHECK(reduced_word(product(rs, Expression{1, 0, 1})) == Expression{0, 1, 0});
  RootSystem aff = a1_affine();
  // translation by the coroot: s_0 s_1
  AffineSystem bundle = AffineSystem::from_finite({{2}});
  WeylElt tr = to_weyl(bundle, AffineElt::translation(bundle, {Int(1)}));
  CHECK(reduced_word(tr) == Expression{0, 1});
  CHECK(aff.compatible(bundle.affine()));
}

TEST_CASE("products of expressions and subexpressions") {
  RootSystem rs = a2();
  Expression sigma{0, 1, 0};
  CHECK(product(rs, sigma) == product(rs, Expression{1, 0, 1}));
  CHECK(product(rs, Subexpression(sigma, 0)) == WeylElt::identity(rs));
  // tau = (s1, s2, e): mask 110
  Subexpression tau(sigma, Subexpression::mask_from_string("110", 3));
  CHECK(product(rs, tau) == product(rs, Expression{0, 1}));
}

TEST_CASE("is_reduced") {
  RootSystem rs = a2();
  CHECK(is_reduced(rs, Expression{}));
  CHECK(is_reduced(rs, Expression{0, 1, 0}));
  CHECK_FALSE(is_reduced(rs, Expression{0, 0}));
  CHECK_FALSE(is_reduced(rs, Expression{0, 1, 0, 1}));
}

TEST_CASE("inversion sets") {
  RootSystem rs = a2();
  CHECK(inversions(WeylElt::identity(rs)).empty());
  auto inv12 = inversions(product(rs, Expression{0, 1}));
  REQUIRE(inv12.size() == 2);
  CHECK(std::count(inv12.begin(), inv12.end(), Root::simple(rs, 0)) == 1);
  CHECK(std::count(inv12.begin(), inv12.end(), Root(rs, {Int(1), Int(1)})) == 1);
  auto invw0 = inversions(product(rs, Expression{0, 1, 0}));
  CHECK(invw0.size() == 3); // every positive root
  CHECK(std::is_sorted(invw0.begin(), invw0.end()));
}

TEST_CASE("inversion count equals length up to length 8") {
  for (RootSystem rs : {a2(), b2(), a1_affine()}) {
    for (const WeylElt& w : weyl_ball(rs, 8)) {
      CAPTURE(length(w));
      CHECK(static_cast<int>(inversions(w).size()) == length(w));
    }
  }
}

TEST_CASE("length parity and root sign under one more generator") {
  std::mt19937 rng(20240811);
  for (RootSystem rs : {a2(), b2(), a1_affine()}) {
    for (int trial = 0; trial < 60; ++trial) {
      WeylElt w = random_element(rs, rng, trial % 9);
      for (int i = 0; i < rs.rank(); ++i) {
        int dl = length(mul(w, WeylElt::simple(rs, i))) - length(w);
        bool up = act(w, Root::simple(rs, i)).is_positive();
        CHECK(dl == (up ? 1 : -1));
      }
      // canonical word round-trip, reducedness, real-root preservation
      Expression word = reduced_word(w);
      CHECK(product(rs, word) == w);
      CHECK(is_reduced(rs, word));
      CHECK_NOTHROW(act(w, Root(rs, {Int(1), Int(1)})));
    }
  }
}

TEST_CASE("Bruhat order examples") {
  RootSystem rs = a2();
  WeylElt e = WeylElt::identity(rs);
  WeylElt s1 = WeylElt::simple(rs, 0), s2 = WeylElt::simple(rs, 1);
  CHECK(bruhat_leq(e, product(rs, Expression{0, 1, 0})));
  CHECK_FALSE(bruhat_leq(s1, s2));
  CHECK(bruhat_leq(product(rs, Expression{0, 1}), product(rs, Expression{0, 1, 0})));
  CHECK_FALSE(bruhat_leq(product(rs, Expression{0, 1, 0}), product(rs, Expression{0, 1})));
}

TEST_CASE("Bruhat order agrees with the subword characterization") {
  for (RootSystem rs : {a2(), b2()}) {
    std::vector<WeylElt> ball = weyl_ball(rs, 6);
    for (const WeylElt& u : ball)
      for (const WeylElt& w : ball) CHECK(bruhat_leq(u, w) == bruhat_leq_subword_oracle(u, w));
  }
}

TEST_CASE("subexpression masks and enumeration order") {
  Expression sigma{0, 1};
  auto subs = subexpressions(sigma);
  REQUIRE(subs.size() == 4);
  CHECK(subs[0].mask_string() == "00");
  CHECK(subs[1].mask_string() == "01");
  CHECK(subs[2].mask_string() == "10");
  CHECK(subs[3].mask_string() == "11");
  CHECK(subexpressions(Expression{}).size() == 1);
  CHECK(subexpressions(Expression{0, 1, 0}).size() == 8);

  CHECK(Subexpression::mask_from_string("10", 2) == 2);
  CHECK_THROWS_AS(Subexpression::mask_from_string("102", 3), ParseError);
  CHECK_THROWS_AS(Subexpression::mask_from_string("1", 2), ParseError);

  Subexpression tau(sigma, 2); // "10"
  CHECK(tau.kept(0));
  CHECK_FALSE(tau.kept(1));
  CHECK(tau.kept_count() == 1);
  CHECK(Subexpression(sigma, 0).refines(tau));
  CHECK(tau.refines(Subexpression::full(sigma)));
  CHECK_FALSE(Subexpression(sigma, 1).refines(tau));

  Subexpression rev = Subexpression(Expression{0, 1, 1}, 0b110).reversed();
  CHECK(rev.expression() == Expression{1, 1, 0});
  CHECK(rev.mask_string() == "011");
  CHECK(rev.reversed() == Subexpression(Expression{0, 1, 1}, 0b110));
}

TEST_CASE("weyl_ball sizes for the finite rank-2 groups") {
  CHECK(weyl_ball(a2(), 99).size() == 6);
  CHECK(weyl_ball(b2(), 99).size() == 8);
  CHECK(weyl_ball(a1_affine(), 4).size() == 9); // 1 + 2 per positive length
}
