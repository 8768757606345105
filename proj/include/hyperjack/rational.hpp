#pragma once

// Exact arithmetic layer. Thin wrappers around GMP's mpz/mpq classes plus
// the handful of combinatorial quantities everything downstream needs.

#include <gmpxx.h>

#include <concepts>
#include <stdexcept>
#include <string>
#include <vector>

namespace hyperjack {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class arithmetic keeps results canonical, but building one from raw
// numerator/denominator does not, so every entry point funnels through here.
inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

// Accepts "p" or "p/q", optional leading minus on either piece.
inline Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    Integer num(s.substr(0, slash));
    Integer den(s.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
}

inline std::string to_string(const Integer& n) { return n.get_str(); }

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw std::domain_error("expected integer, got " + to_string(r));
  return r.get_num();
}

inline Rational pow_rational(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw std::domain_error("zero raised to a negative power");
    return Rational(0);
  }
  Rational b = base;
  if (e < 0) {
    b = Rational(1) / b;
    e = -e;
  }
  Rational num, den;
  mpz_pow_ui(num.get_num_mpz_t(), b.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(num.get_den_mpz_t(), b.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  num.canonicalize();  // already coprime, but cheap insurance
  (void)den;
  return num;
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// (a_1 + ... + a_m)! / (a_1! ... a_m!)
inline Integer multinomial(const std::vector<unsigned long>& parts) {
  unsigned long total = 0;
  for (auto a : parts) total += a;
  Integer r = factorial(total);
  for (auto a : parts) {
    Integer d = factorial(a);
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  }
  return r;
}

// Validating form: the blocks must account for the whole of `total`.
inline Integer multinomial(unsigned long total, const std::vector<unsigned long>& parts) {
  unsigned long sum = 0;
  for (auto a : parts) sum += a;
  if (sum != total) throw std::invalid_argument("multinomial: parts do not sum to total");
  return multinomial(parts);
}

// binom(kn; k,...,k) with n blocks of size k
inline Integer central_multinomial(unsigned long n, unsigned long k) {
  return multinomial(std::vector<unsigned long>(n, k));
}

// Rings that the hyperdeterminant templates can work over. Everything here
// is commutative and exact; "scale" is multiplication by a rational scalar.
template <class R>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Rational scale(const Rational& x, const Rational& c) { return Rational(x * c); }
};

template <class R>
concept RingElement = requires(R a, R b, Rational c) {
  { R(RingTraits<R>::zero()) };
  { R(RingTraits<R>::one()) };
  { RingTraits<R>::is_zero(a) } -> std::convertible_to<bool>;
  { R(a + b) };
  { R(a * b) };
  { R(RingTraits<R>::scale(a, c)) };
  { a == b } -> std::convertible_to<bool>;
};

}  // namespace hyperjack
