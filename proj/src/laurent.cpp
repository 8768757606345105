#include "hyperjack/laurent.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>

namespace hyperjack {

namespace {
std::atomic<size_t> g_peak_terms{0};
}

void LaurentPoly::note_size(size_t n) {
  size_t prev = g_peak_terms.load();
  while (n > prev && !g_peak_terms.compare_exchange_weak(prev, n)) {
  }
}

size_t LaurentPoly::peak_term_count() { return g_peak_terms.load(); }

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(Exponents(nvars, 0), c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Exponents& e, const Rational& c) {
  LaurentPoly p(nvars);
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i, int power) {
  if (i < 0 || i >= nvars) throw std::out_of_range("variable index");
  Exponents e(nvars, 0);
  e[i] = power;
  return monomial(nvars, e, Rational(1));
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("exponent vector has wrong length");
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void LaurentPoly::check_compatible(const LaurentPoly& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("mixed variable counts");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, Rational(-c));
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, Rational(-c));
  return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
  if (c == 0) return LaurentPoly(nvars_);
  LaurentPoly r(nvars_);
  for (const auto& [e, k] : terms_) r.terms_.emplace(e, Rational(k * c));
  return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  check_compatible(o);
  LaurentPoly r(nvars_);
  Exponents e(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, Rational(c1 * c2));
    }
  }
  note_size(r.terms_.size());
  return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) throw std::invalid_argument("pow: negative exponent");
  LaurentPoly acc = constant(nvars_, Rational(1));
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

LaurentPoly LaurentPoly::invert_alphabet() const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents inv(nvars_);
    for (int i = 0; i < nvars_; ++i) inv[i] = -e[i];
    r.terms_.emplace(std::move(inv), c);
  }
  return r;
}

LaurentPoly LaurentPoly::truncate_total_degree(int d) const {
  LaurentPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int total = 0;
    for (int x : e) total += x;
    if (total <= d) r.terms_.emplace(e, c);
  }
  return r;
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational LaurentPoly::constant_term() const {
  return coefficient(Exponents(nvars_, 0));
}

Rational LaurentPoly::evaluate(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != nvars_)
    throw std::invalid_argument("evaluate: wrong number of values");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) t *= pow_rational(values[i], e[i]);
    total += t;
  }
  return total;
}

bool LaurentPoly::symmetric() const {
  // adjacent transpositions generate S_n
  for (int i = 0; i + 1 < nvars_; ++i) {
    for (const auto& [e, c] : terms_) {
      Exponents s = e;
      std::swap(s[i], s[i + 1]);
      if (coefficient(s) != c) return false;
    }
  }
  return true;
}

LaurentPoly vandermonde(int n) {
  LaurentPoly r = LaurentPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      r = r * (LaurentPoly::variable(n, i) - LaurentPoly::variable(n, j));
  return r;
}

LaurentPoly alternant(const ShiftVector& v) {
  int n = static_cast<int>(v.size());
  LaurentPoly r(n);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly::Exponents e(n);
    for (int i = 0; i < n; ++i) e[i] = v[perm[i]];
    r.add_term(e, Rational(inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (num.nvars() != den.nvars())
    throw std::invalid_argument("divide_exact: mixed variable counts");
  if (den.is_zero()) throw std::domain_error("divide_exact: zero divisor");
  int n = num.nvars();
  LaurentPoly rem = num;
  LaurentPoly quot(n);
  // lex-leading term of the divisor
  const auto lead = std::prev(den.terms().end());
  const auto& de = lead->first;
  const Rational& dc = lead->second;
  // each round kills the leading term of the remainder, so the loop
  // terminates whenever the division is exact; the cap catches the rest
  size_t cap = 4 * (num.term_count() + 1) * (den.term_count() + 1) + 64;
  for (size_t round = 0; !rem.is_zero(); ++round) {
    if (round > cap) throw std::domain_error("divide_exact: inexact division");
    const auto rl = std::prev(rem.terms().end());
    LaurentPoly::Exponents q(n);
    for (int i = 0; i < n; ++i) q[i] = rl->first[i] - de[i];
    Rational qc = rl->second / dc;
    LaurentPoly qt = LaurentPoly::monomial(n, q, qc);
    quot = quot + qt;
    rem = rem - qt * den;
  }
  return quot;
}

Integer dyson_ct(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (n == 0) return Integer(1);
  for (int ai : a)
    if (ai < 0) throw std::invalid_argument("dyson_ct: negative exponent");
  LaurentPoly prod = LaurentPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    LaurentPoly factor = LaurentPoly::constant(n, Rational(1));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      LaurentPoly::Exponents e(n, 0);
      e[i] = 1;
      e[j] = -1;
      factor = factor * (LaurentPoly::constant(n, Rational(1)) -
                         LaurentPoly::monomial(n, e, Rational(1)));
    }
    prod = prod * factor.pow(a[i]);
  }
  return to_integer(prod.constant_term());
}

}  // namespace hyperjack
