#include "hyperjack/jack.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace hyperjack {

namespace {

using Terms = SymFunc::TermMap;

Rational inner_p(const Terms& a, const Terms& b, const Rational& alpha) {
  Rational total(0);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      total += ia->second * ib->second * Rational(z_lambda(ia->first)) *
               pow_rational(alpha, ia->first.length());
      ++ia;
      ++ib;
    }
  }
  return total;
}

void axpy(Terms& acc, const Rational& c, const Terms& v) {
  if (c == 0) return;
  for (const auto& [lam, k] : v) {
    auto [it, fresh] = acc.emplace(lam, Rational(c * k));
    if (!fresh) {
      it->second += c * k;
      if (it->second == 0) acc.erase(it);
    }
  }
}

struct Family {
  std::vector<Partition> parts;  // reverse-lex, largest first
  std::map<Partition, int> index;
  std::vector<SymFunc> P;        // m basis, monic
  std::vector<Terms> P_p;        // same functions in p coordinates
  std::vector<Rational> norm;    // <P,P>_alpha
};

Family build_family(int d, const Rational& alpha, GSOrder order) {
  Family fam;
  fam.parts = partitions_of(d);
  size_t n = fam.parts.size();
  for (size_t i = 0; i < n; ++i) fam.index.emplace(fam.parts[i], static_cast<int>(i));

  // processing order: dominance-minimal partitions first
  std::vector<int> todo(n);
  for (size_t i = 0; i < n; ++i) todo[i] = static_cast<int>(n - 1 - i);
  if (order == GSOrder::LengthGraded) {
    std::stable_sort(todo.begin(), todo.end(), [&fam](int a, int b) {
      return fam.parts[a].length() > fam.parts[b].length();
    });
  }

  std::vector<Terms> m_in_p(n);
  for (size_t i = 0; i < n; ++i)
    m_in_p[i] = m_sf(fam.parts[i]).to_basis(Basis::P).terms();

  std::vector<Terms> vec(n);
  std::vector<Rational> raw_norm(n);
  std::vector<bool> done(n, false);
  for (int i : todo) {
    Terms v = m_in_p[i];
    for (size_t j = 0; j < n; ++j) {
      if (!done[j] || j == static_cast<size_t>(i)) continue;
      if (!dominance_leq(fam.parts[j], fam.parts[i]) || fam.parts[j] == fam.parts[i])
        continue;
      Rational c = inner_p(v, vec[j], alpha);
      if (c == 0) continue;
      axpy(v, Rational(-c / raw_norm[j]), vec[j]);
    }
    raw_norm[i] = inner_p(v, v, alpha);
    if (raw_norm[i] == 0)
      throw std::domain_error("jack_P: Gram-Schmidt singular at alpha = " + to_string(alpha));
    vec[i] = std::move(v);
    done[i] = true;
  }

  fam.P.resize(n);
  fam.P_p.resize(n);
  fam.norm.resize(n);
  for (size_t i = 0; i < n; ++i) {
    SymFunc p_form(Basis::P);
    for (const auto& [lam, c] : vec[i]) p_form.add_term(lam, c);
    SymFunc m_form = p_form.to_basis(Basis::M);
    Rational lead = m_form.coefficient(fam.parts[i]);
    if (lead == 0) throw std::logic_error("jack_P: lost the leading monomial");
    fam.P[i] = m_form * (Rational(1) / lead);
    Terms scaled = vec[i];
    for (auto& [lam, c] : scaled) c /= lead;
    fam.P_p[i] = std::move(scaled);
    fam.norm[i] = raw_norm[i] / (lead * lead);
  }
  return fam;
}

std::mutex g_jack_mutex;

const Family& jack_family(int d, const Rational& alpha, GSOrder order) {
  if (alpha == 0) throw std::invalid_argument("jack: alpha must be nonzero");
  static std::map<std::string, Family> cache;
  std::string key = std::to_string(d) + "@" + to_string(alpha) +
                    (order == GSOrder::ReverseLex ? "" : "#L");
  std::lock_guard<std::mutex> lock(g_jack_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  return cache.emplace(key, build_family(d, alpha, order)).first->second;
}

}  // namespace

SymFunc jack_P(const Partition& lam, const Rational& alpha, GSOrder order) {
  const Family& fam = jack_family(lam.weight(), alpha, order);
  return fam.P[fam.index.at(lam)];
}

Rational jack_P_norm(const Partition& lam, const Rational& alpha) {
  const Family& fam = jack_family(lam.weight(), alpha, GSOrder::ReverseLex);
  return fam.norm[fam.index.at(lam)];
}

namespace {

int arm(const Partition& lam, int i, int j) { return lam.parts()[i] - j - 1; }
int leg(const Partition& conj, int i, int j) { return conj.parts()[j] - i - 1; }

}  // namespace

std::pair<Rational, Rational> c_cprime(const Partition& lam, const Rational& alpha) {
  Partition conj = lam.conjugate();
  Rational c(1), cp(1);
  for (int i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam.parts()[i]; ++j) {
      int a = arm(lam, i, j), l = leg(conj, i, j);
      c *= alpha * a + l + 1;
      cp *= alpha * (a + 1) + l;
    }
  return {c, cp};
}

Rational b_lambda(const Partition& lam, const Rational& alpha) {
  auto [c, cp] = c_cprime(lam, alpha);
  if (cp == 0) throw std::domain_error("b_lambda: zero hook denominator at this alpha");
  return c / cp;
}

SymFunc jack_Q(const Partition& lam, const Rational& alpha) {
  return jack_P(lam, alpha) * b_lambda(lam, alpha);
}

SymFunc jack_J(const Partition& lam, const Rational& alpha) {
  return jack_P(lam, alpha) * c_cprime(lam, alpha).first;
}

std::map<Partition, Rational> expand_in_P(const SymFunc& f, const Rational& alpha) {
  SymFunc mf = f.to_basis(Basis::M);
  std::map<Partition, Rational> out;
  if (mf.is_zero()) return out;
  int d = mf.max_weight();
  for (const auto& [lam, c] : mf.terms())
    if (lam.weight() != d)
      throw std::invalid_argument("expand_in_P: input is not homogeneous");
  const Family& fam = jack_family(d, alpha, GSOrder::ReverseLex);
  SymFunc residual = mf;
  // P is unitriangular over m for dominance, so peeling from the top works
  for (size_t i = 0; i < fam.parts.size(); ++i) {
    Rational c = residual.coefficient(fam.parts[i]);
    if (c == 0) continue;
    out.emplace(fam.parts[i], c);
    residual = residual - fam.P[i] * c;
  }
  if (!residual.is_zero()) throw std::logic_error("expand_in_P: residual left over");
  return out;
}

SymFunc skew_Q(const Partition& lam, const Partition& mu, const Rational& alpha) {
  if (!lam.contains(mu)) return SymFunc::zero(Basis::M);
  int d = lam.weight() - mu.weight();
  if (d == 0) return SymFunc::one(Basis::M);
  if (mu.empty()) return jack_Q(lam, alpha);
  SymFunc P_mu = jack_P(mu, alpha);
  SymFunc out(Basis::M);
  for (const Partition& nu : partitions_of(d)) {
    // coefficient of P_lambda in P_nu P_mu
    auto expansion = expand_in_P(jack_P(nu, alpha) * P_mu, alpha);
    auto it = expansion.find(lam);
    if (it == expansion.end() || it->second == 0) continue;
    out = out + jack_Q(nu, alpha) * it->second;
  }
  return out;
}

SymFunc skew_P(const Partition& lam, const Partition& mu, const Rational& alpha) {
  return skew_Q(lam, mu, alpha) * (b_lambda(mu, alpha) / b_lambda(lam, alpha));
}

std::pair<Rational, Rational> branching_sides(const Partition& lam, const Rational& alpha,
                                              const std::vector<Rational>& xs,
                                              const std::vector<Rational>& ys) {
  std::vector<Rational> both = xs;
  both.insert(both.end(), ys.begin(), ys.end());
  Rational lhs = evaluate(jack_Q(lam, alpha), both);
  Rational rhs(0);
  for (int d = 0; d <= lam.weight(); ++d)
    for (const Partition& mu : partitions_of(d)) {
      if (!lam.contains(mu)) continue;
      rhs += evaluate(jack_Q(mu, alpha), xs) * evaluate(skew_Q(lam, mu, alpha), ys);
    }
  return {lhs, rhs};
}

bool branching_check(const Partition& lam, const Rational& alpha,
                     const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  auto [lhs, rhs] = branching_sides(lam, alpha, xs, ys);
  return lhs == rhs;
}

Rational scalar_prime_rect(const Partition& lam_conj, int n, const Rational& alpha) {
  if (n < 1) throw std::invalid_argument("scalar_prime_rect: n must be positive");
  if (alpha <= 0)
    throw std::invalid_argument("scalar_prime_rect: 1/alpha must be a positive integer");
  Rational inv = Rational(1) / alpha;
  if (!is_integer(inv))
    throw std::invalid_argument("scalar_prime_rect: 1/alpha must be a positive integer");
  long k = inv.get_num().get_si();
  // cell product over lam_conj; a zero numerator (first hit in row n+1,
  // column 1) makes the whole product vanish before any zero denominator
  // can appear
  Rational prod(1);
  for (int i = 1; i <= lam_conj.length(); ++i)
    for (int j = 1; j <= lam_conj.parts()[i - 1]; ++j) {
      Rational num = Rational(n - i + 1) + make_rational(j - 1, k);
      if (num == 0) return Rational(0);
      Rational den = Rational(n - i) + make_rational(j, k);
      if (den == 0)
        throw std::domain_error("scalar_prime_rect: zero denominator cell");
      prod *= num / den;
    }
  Rational ct(central_multinomial(static_cast<unsigned long>(n),
                                  static_cast<unsigned long>(k)));
  return prod * ct / Rational(factorial(static_cast<unsigned long>(n)));
}

SymFunc jack_R(const Partition& lam, const Rational& alpha, int n) {
  if (!is_integer(alpha) || alpha <= 0)
    throw std::invalid_argument("jack_R: alpha must be a positive integer");
  Rational scalar = scalar_prime_rect(lam.conjugate(), n, Rational(1) / alpha);
  if (scalar == 0) return SymFunc::zero(Basis::M);
  return jack_Q(lam, alpha) * scalar;
}

Rational kappa(int n, int p, int l, int k) {
  if (n < 1 || p < 0 || l < 0 || l > n || k < 1)
    throw std::invalid_argument("kappa: need n,k >= 1, p >= 0, 0 <= l <= n");
  Rational r(1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= p; ++j)
      r *= Rational(j + k * (i - 1)) / Rational(j - 1 + k * i);
  for (int i = 1; i <= l; ++i)
    r *= Rational(p + 1 + k * (n - i)) / Rational(p + k * (n - i + 1));
  return r;
}

Rational b_rect_closed(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("b_rect_closed: need n, k >= 1");
  Rational num(factorial(2 * (n - 1)) * factorial(n * k) * factorial((n - 1) * k));
  Rational den(Integer(k) * factorial(n) * factorial(n - 1) *
               factorial((2 * n - 1) * k - 1));
  return num / den;
}

}  // namespace hyperjack
