#pragma once

#include <map>
#include <vector>

#include "hyperjack/laurent.hpp"
#include "hyperjack/partition.hpp"
#include "hyperjack/rational.hpp"

namespace hyperjack {

// The five classical bases, indexed by partitions.
enum class Basis : char { M = 'm', E = 'e', H = 'h', P = 'p', S = 's' };

Basis basis_from_char(char c);
char basis_to_char(Basis b);

// A finite rational combination of basis elements of one fixed basis.
// Inhomogeneous combinations are allowed; conversions work degree by degree.
class SymFunc {
 public:
  using TermMap = std::map<Partition, Rational>;

  explicit SymFunc(Basis b = Basis::P) : basis_(b) {}

  static SymFunc zero(Basis b = Basis::P) { return SymFunc(b); }
  static SymFunc one(Basis b = Basis::P) { return generator(b, Partition{}); }
  static SymFunc generator(Basis b, const Partition& lam, const Rational& c = Rational(1));

  Basis basis() const { return basis_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // single term c * (empty partition): behaves like the scalar c in any basis
  bool is_scalar() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }

  void add_term(const Partition& lam, const Rational& c);
  Rational coefficient(const Partition& lam) const;
  int max_weight() const;

  SymFunc operator+(const SymFunc& o) const;
  SymFunc operator-(const SymFunc& o) const;
  SymFunc operator*(const SymFunc& o) const;
  SymFunc operator*(const Rational& c) const;
  SymFunc operator-() const;
  // structural: same basis and same term map (scalars compare across bases)
  bool operator==(const SymFunc& o) const;

  SymFunc to_basis(Basis target) const;

 private:
  Basis basis_;
  TermMap terms_;
};

template <>
struct RingTraits<SymFunc> {
  static SymFunc zero() { return SymFunc(); }
  static SymFunc one() { return SymFunc::one(); }
  static bool is_zero(const SymFunc& f) { return f.is_zero(); }
  static SymFunc scale(const SymFunc& f, const Rational& c) { return f * c; }
};

// An alphabet to specialize on: the formal one (infinitely many letters), a
// finite list of rational values, or the degenerate A0 with Lambda^p = 0 for
// every p != 0.
struct Alphabet {
  enum class Kind { FormalInfinite, FiniteValues, AZero };
  Kind kind = Kind::FormalInfinite;
  std::vector<Rational> values;

  static Alphabet formal() { return {}; }
  static Alphabet finite(std::vector<Rational> v) {
    return {Kind::FiniteValues, std::move(v)};
  }
  static Alphabet azero() { return {Kind::AZero, {}}; }
};

// Lambda^p of an alphabet. The value form covers FiniteValues and AZero;
// the formal form additionally covers FormalInfinite (as the basis element
// e_p). p < 0 gives zero, p = 0 gives one, in every case.
Rational lambda_value(const Alphabet& X, int p);
SymFunc lambda_formal(const Alphabet& X, int p);

// elementary / complete symmetric polynomials of a value list
Rational elementary_value(const std::vector<Rational>& values, int p);
Rational complete_value(const std::vector<Rational>& values, int p);

// single generators; r < 0 gives 0, r = 0 gives 1
SymFunc e_sf(int r);
SymFunc h_sf(int r);
SymFunc p_sf(int r);
// products over the parts
SymFunc e_sf(const Partition& lam);
SymFunc h_sf(const Partition& lam);
SymFunc p_sf(const Partition& lam);
SymFunc m_sf(const Partition& lam);

// Schur function as the h-basis Jacobi-Trudi determinant det(h_{lam_i - i + j}).
SymFunc schur(const Partition& lam);
// Dual form det(e_{lam'_i - i + j}) with lam' zero-padded to n rows; needs
// l(lam) <= ... the conjugate to fit, i.e. lam_1 <= n is NOT required, the
// pad is on the conjugate side: requires l(lam') <= n, i.e. lam_1 <= n.
SymFunc schur_dual(const Partition& lam, int n);

// omega_alpha: p_r -> (-1)^{r-1} alpha p_r. Result in the p basis.
SymFunc omega_alpha(const SymFunc& f, const Rational& alpha);
// X -> -X on the alphabet level: p_r -> -p_r. Result in the p basis.
SymFunc negate_alphabet(const SymFunc& f);

// <p_lam, p_mu>_alpha = delta z_lam alpha^{l(lam)}
Rational scalar_alpha(const SymFunc& f, const SymFunc& g, const Rational& alpha);

// numeric specialization on a finite alphabet of values
Rational evaluate(const SymFunc& f, const std::vector<Rational>& values);

// expansion as an honest polynomial in n variables (monomial basis route)
LaurentPoly realize(const SymFunc& f, int nvars);

// inverse of realize: symmetric polynomial with nonnegative exponents back
// to the m basis; throws if the input is not symmetric
SymFunc from_polynomial(const LaurentPoly& poly);

// prod_{i != j} (1 - x_i/x_j)^k
LaurentPoly ct_kernel(int n, int k);

// <f, g>'_{n,k} = (1/n!) CT[ f(x) g(1/x) prod_{i != j} (1 - x_i/x_j)^k ],
// both arguments realized in n variables
Rational scalar_prime(const SymFunc& f, const SymFunc& g, int n, int k);

// Laurent Schur function: a_{v+delta} / a_delta for any weakly decreasing
// integer vector v of length n (negative entries allowed). For v a padded
// partition this is the polynomial realization of schur(v).
LaurentPoly schur_laurent(const ShiftVector& v, int n);
LaurentPoly schur_laurent(const Partition& lam, int n);

// equality as symmetric functions: convert b into a's basis and compare
bool equivalent(const SymFunc& a, const SymFunc& b);

std::string to_string(const SymFunc& f);

}  // namespace hyperjack
