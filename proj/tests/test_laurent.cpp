#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperjack/laurent.hpp"

using namespace hyperjack;

namespace {
LaurentPoly rand_poly(std::mt19937& rng, int nvars, int nterms) {
  std::uniform_int_distribution<int> ed(-3, 3), cd(-9, 9);
  LaurentPoly f(nvars);
  for (int t = 0; t < nterms; ++t) {
    std::vector<int> e(nvars);
    for (int& x : e) x = ed(rng);
    f.add_term(e, Rational(cd(rng)));
  }
  return f;
}
}  // namespace

TEST_CASE("vandermonde expansion") {
  CHECK(vandermonde(1) == LaurentPoly::constant(1, Rational(1)));
  LaurentPoly d2 = vandermonde(2);
  CHECK(d2.coefficient({1, 0}) == 1);
  CHECK(d2.coefficient({0, 1}) == -1);
  CHECK(d2.term_count() == 2);
  LaurentPoly d3 = vandermonde(3);
  CHECK(d3.term_count() == 6);
  CHECK(d3.coefficient({2, 1, 0}) == 1);
  for (const auto& [e, c] : d3.terms()) CHECK((c == 1 || c == -1));
}

TEST_CASE("alternants") {
  CHECK(alternant({1, 0}) == vandermonde(2));
  CHECK(alternant({2, 2}).is_zero());
  CHECK(alternant({2, 1, 0}) == vandermonde(3));
  CHECK(alternant({1, 1, 0}).is_zero());
}

TEST_CASE("constant term") {
  CHECK(LaurentPoly::constant(1, make_rational(7, 2)).constant_term() == make_rational(7, 2));
  CHECK(LaurentPoly::variable(1, 0).constant_term() == 0);
  LaurentPoly f = (LaurentPoly::constant(2, Rational(1)) -
                   LaurentPoly::monomial(2, {1, -1}, Rational(1))) *
                  (LaurentPoly::constant(2, Rational(1)) -
                   LaurentPoly::monomial(2, {-1, 1}, Rational(1)));
  CHECK(f.constant_term() == 2);
}

TEST_CASE("alphabet inversion") {
  CHECK(LaurentPoly::variable(2, 0).invert_alphabet() == LaurentPoly::variable(2, 0, -1));
  LaurentPoly c = LaurentPoly::constant(2, Rational(5));
  CHECK(c.invert_alphabet() == c);
  std::mt19937 rng(23);
  for (int t = 0; t < 50; ++t) {
    LaurentPoly f = rand_poly(rng, 3, 6);
    CHECK(f.invert_alphabet().invert_alphabet() == f);
  }
}

TEST_CASE("dyson constant term") {
  CHECK(dyson_ct({0, 0, 0}) == 1);
  CHECK(dyson_ct({1, 1}) == 2);
  CHECK(dyson_ct({1, 1, 1}) == 6);
  for (int a0 = 0; a0 <= 2; ++a0)
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 <= 2; ++a2) {
        std::vector<unsigned long> parts = {static_cast<unsigned long>(a0),
                                            static_cast<unsigned long>(a1),
                                            static_cast<unsigned long>(a2)};
        CHECK(dyson_ct({a0, a1, a2}) == multinomial(parts));
      }
  // spot checks at n = 4
  CHECK(dyson_ct({1, 1, 1, 1}) == 24);
  CHECK(dyson_ct({2, 1, 1, 1}) == multinomial({2, 1, 1, 1}));
  CHECK(dyson_ct({2, 2, 1, 0}) == multinomial({2, 2, 1, 0}));
}

TEST_CASE("ring operations") {
  std::mt19937 rng(5);
  LaurentPoly f = rand_poly(rng, 2, 5);
  CHECK(f * LaurentPoly::constant(2, Rational(1)) == f);
  CHECK((f * LaurentPoly::zero(2)).is_zero());
  LaurentPoly sq = vandermonde(2).pow(2);
  CHECK(sq.coefficient({2, 0}) == 1);
  CHECK(sq.coefficient({1, 1}) == -2);
  CHECK(sq.coefficient({0, 2}) == 1);
  CHECK(sq.term_count() == 3);
  CHECK_THROWS_AS(f * LaurentPoly::zero(3), std::invalid_argument);
  CHECK(f.pow(0) == LaurentPoly::constant(2, Rational(1)));
}

TEST_CASE("evaluation") {
  CHECK(vandermonde(2).evaluate({Rational(1), Rational(2)}) == -1);
  CHECK(LaurentPoly::constant(2, make_rational(5, 3)).evaluate({Rational(1), Rational(4)}) ==
        make_rational(5, 3));
  CHECK(vandermonde(3).pow(2).evaluate({Rational(1), Rational(2), Rational(4)}) == 36);
  CHECK_THROWS_AS(LaurentPoly::variable(1, 0, -1).evaluate({Rational(0)}), std::domain_error);
}

TEST_CASE("vandermonde powers are symmetric") {
  for (int n = 2; n <= 3; ++n)
    for (int k = 1; k <= 2; ++k) CHECK(vandermonde(n).pow(2 * k).symmetric());
  CHECK(vandermonde(4).pow(2).symmetric());
}

TEST_CASE("constant term is linear") {
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    LaurentPoly f = rand_poly(rng, 2, 5), g = rand_poly(rng, 2, 5);
    Rational a = make_rational(3, 2), b = Rational(-4);
    CHECK((f * a + g * b).constant_term() ==
          Rational(a * f.constant_term() + b * g.constant_term()));
  }
}

TEST_CASE("truncation and exact division") {
  LaurentPoly f = vandermonde(2).pow(2);
  LaurentPoly t = f.truncate_total_degree(1);
  CHECK(t.is_zero());
  CHECK(f.truncate_total_degree(2) == f);
  CHECK(divide_exact(f, vandermonde(2)) == vandermonde(2));
  CHECK_THROWS(divide_exact(LaurentPoly::variable(2, 0), vandermonde(2)));
}
