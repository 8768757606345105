#pragma once

#include <map>
#include <vector>

#include "hyperjack/partition.hpp"
#include "hyperjack/rational.hpp"

namespace hyperjack {

// Laurent polynomial in n variables x_1..x_n with rational coefficients.
// Terms live in a map keyed by exponent vector (lexicographic order), so
// iteration and serialization are deterministic.
class LaurentPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  explicit LaurentPoly(int nvars = 0) : nvars_(nvars) {}

  static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
  static LaurentPoly constant(int nvars, const Rational& c);
  static LaurentPoly monomial(int nvars, const Exponents& e, const Rational& c);
  static LaurentPoly variable(int nvars, int i, int power = 1);  // x_{i+1}^power

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rational& c) const;
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const = default;

  LaurentPoly pow(int e) const;  // e >= 0, repeated squaring

  // x_i -> 1/x_i for every variable
  LaurentPoly invert_alphabet() const;

  // drop terms whose total degree exceeds d (used for truncated kernels)
  LaurentPoly truncate_total_degree(int d) const;

  Rational coefficient(const Exponents& e) const;
  Rational constant_term() const;

  // substitute values for the variables; a negative exponent on a zero value
  // is rejected
  Rational evaluate(const std::vector<Rational>& values) const;

  // invariant under all adjacent variable swaps?
  bool symmetric() const;

  // peak term count seen by any product formed so far (process-wide)
  static size_t peak_term_count();

 private:
  int nvars_ = 0;
  TermMap terms_;

  void check_compatible(const LaurentPoly& o) const;
  static void note_size(size_t n);
};

// prod_{i<j} (x_i - x_j)
LaurentPoly vandermonde(int n);

// a_v = sum_{sigma in S_n} sign(sigma) x_1^{v_{sigma(1)}} ... x_n^{v_{sigma(n)}}
LaurentPoly alternant(const ShiftVector& v);

// Exact division: returns q with num = q * den, throwing if the division
// leaves a remainder (leading-term elimination in lex order).
LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// Constant term of prod_{i != j} (1 - x_i/x_j)^{a_i}; the a_i must be >= 0.
// The value is a nonnegative integer.
Integer dyson_ct(const std::vector<int>& a);

}  // namespace hyperjack
