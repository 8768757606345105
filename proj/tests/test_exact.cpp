#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperjack/rational.hpp"

using namespace hyperjack;

namespace {
Rational rand_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 20);
  return make_rational(num(rng), den(rng));
}
}  // namespace

TEST_CASE("rationals are stored canonically") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == Rational(0));
  CHECK(to_string(make_rational(-4, 6)) == "-2/3");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == make_rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(parse_rational("5/-10") == make_rational(-1, 2));
  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(2, 1) == 2);
  CHECK(binomial(6, 3) == 20);
  CHECK(multinomial(2, {1, 1}) == 2);
  CHECK(multinomial(0, {}) == 1);
  CHECK(multinomial(6, {2, 2, 2}) == 90);
  CHECK(multinomial(6, {2, 2, 2}) == multinomial(6, {2, 2, 2}));
  CHECK(multinomial(5, {3, 1, 1}) == multinomial(5, {1, 3, 1}));
  CHECK_THROWS_AS(multinomial(5, {2, 2, 2}), std::invalid_argument);
  CHECK(central_multinomial(3, 2) == 90);
  CHECK(central_multinomial(2, 1) == 2);
  CHECK(central_multinomial(3, 1) == 6);
}

TEST_CASE("pow_rational") {
  CHECK(pow_rational(make_rational(2, 3), -2) == make_rational(9, 4));
  CHECK(pow_rational(Rational(5), 0) == 1);
  CHECK(pow_rational(Rational(-2), 3) == -8);
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
}

TEST_CASE("arithmetic is exact") {
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng);
    CHECK(Rational(Rational(a + b) - b) == a);
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    Rational a = rand_rational(rng), b = rand_rational(rng), c = rand_rational(rng);
    CHECK(Rational(a + b) == Rational(b + a));
    CHECK(Rational(a * b) == Rational(b * a));
    CHECK(Rational(Rational(a + b) + c) == Rational(a + Rational(b + c)));
    CHECK(Rational(Rational(a * b) * c) == Rational(a * Rational(b * c)));
    CHECK(Rational(a * Rational(b + c)) == Rational(Rational(a * b) + Rational(a * c)));
    CHECK(Rational(a * Rational(1)) == a);
    CHECK(Rational(a + Rational(0)) == a);
  }
}

TEST_CASE("integer conversion") {
  CHECK(is_integer(make_rational(6, 3)));
  CHECK(to_integer(make_rational(6, 3)) == 2);
  CHECK_FALSE(is_integer(make_rational(1, 2)));
  CHECK_THROWS_AS(to_integer(make_rational(1, 2)), std::domain_error);
}
