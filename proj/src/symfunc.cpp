#include "hyperjack/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>

namespace hyperjack {

Basis basis_from_char(char c) {
  switch (c) {
    case 'm': return Basis::M;
    case 'e': return Basis::E;
    case 'h': return Basis::H;
    case 'p': return Basis::P;
    case 's': return Basis::S;
  }
  throw std::invalid_argument(std::string("unknown basis '") + c + "'");
}

char basis_to_char(Basis b) { return static_cast<char>(b); }

// ---------------------------------------------------------------------------
// SymFunc basics

SymFunc SymFunc::generator(Basis b, const Partition& lam, const Rational& c) {
  SymFunc f(b);
  f.add_term(lam, c);
  return f;
}

void SymFunc::add_term(const Partition& lam, const Rational& c) {
  if (c == 0) return;
  auto it = terms_.find(lam);
  if (it == terms_.end()) {
    terms_.emplace(lam, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational SymFunc::coefficient(const Partition& lam) const {
  auto it = terms_.find(lam);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymFunc::max_weight() const {
  int w = 0;
  for (const auto& [lam, c] : terms_) w = std::max(w, lam.weight());
  return w;
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  SymFunc r = *this;
  if (o.basis_ == basis_ || o.is_scalar()) {
    for (const auto& [lam, c] : o.terms_) r.add_term(lam, c);
  } else if (is_scalar()) {
    r = o;
    for (const auto& [lam, c] : terms_) r.add_term(lam, c);
  } else {
    SymFunc conv = o.to_basis(basis_);
    for (const auto& [lam, c] : conv.terms_) r.add_term(lam, c);
  }
  return r;
}

SymFunc SymFunc::operator-() const {
  SymFunc r(basis_);
  for (const auto& [lam, c] : terms_) r.terms_.emplace(lam, Rational(-c));
  return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const { return *this + (-o); }

SymFunc SymFunc::operator*(const Rational& c) const {
  if (c == 0) return SymFunc(basis_);
  SymFunc r(basis_);
  for (const auto& [lam, k] : terms_) r.terms_.emplace(lam, Rational(k * c));
  return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
  if (is_scalar() && o.is_scalar())
    return coefficient(Partition{}) == o.coefficient(Partition{});
  return basis_ == o.basis_ && terms_ == o.terms_;
}

namespace {

// multiset union of parts
Partition concat_parts(const Partition& a, const Partition& b) {
  std::vector<int> out;
  out.reserve(a.length() + b.length());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
             b.parts().end(), std::back_inserter(out), std::greater<int>());
  return Partition(std::move(out));
}

using Terms = SymFunc::TermMap;

Terms concat_product(const Terms& A, const Terms& B) {
  Terms out;
  for (const auto& [la, ca] : A)
    for (const auto& [lb, cb] : B) {
      Partition key = concat_parts(la, lb);
      auto [it, fresh] = out.emplace(key, Rational(ca * cb));
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  return out;
}

int multiplicity_of(const Partition& lam, int v) {
  int m = 0;
  for (int p : lam.parts()) m += (p == v) ? 1 : 0;
  return m;
}

Partition with_part_added(const Partition& lam, int v) {
  std::vector<int> parts = lam.parts();
  parts.insert(std::upper_bound(parts.begin(), parts.end(), v, std::greater<int>()), v);
  return Partition(std::move(parts));
}

Partition with_part_replaced(const Partition& lam, int from, int to) {
  std::vector<int> parts = lam.parts();
  parts.erase(std::find(parts.begin(), parts.end(), from));
  Partition base(std::move(parts));
  return with_part_added(base, to);
}

// m_mu * p_r expanded in the m basis. The coefficient of m_nu is the number
// of parts of nu that can absorb the r (counted with multiplicity), which is
// the multiplicity in nu of the value that grew.
Terms multiply_by_p_in_m(const Terms& f, int r) {
  Terms out;
  auto bump = [&out](const Partition& nu, const Rational& c) {
    auto [it, fresh] = out.emplace(nu, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  for (const auto& [mu, c] : f) {
    Partition appended = with_part_added(mu, r);
    bump(appended, Rational(c * multiplicity_of(appended, r)));
    int prev = -1;
    for (int w : mu.parts()) {
      if (w == prev) continue;
      prev = w;
      Partition nu = with_part_replaced(mu, w, w + r);
      bump(nu, Rational(c * multiplicity_of(nu, w + r)));
    }
  }
  return out;
}

// --- generator expansions, cached ------------------------------------------

std::mutex g_cache_mutex;

const Terms& e_in_p(int r);
const Terms& h_in_p(int r);

// r e_r = sum_{i=1}^{r} (-1)^{i-1} p_i e_{r-i}
const Terms& e_in_p(int r) {
  static std::map<int, Terms> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Terms out;
  if (r == 0) {
    out.emplace(Partition{}, Rational(1));
  } else {
    for (int i = 1; i <= r; ++i) {
      Rational sign((i % 2) ? 1 : -1);
      for (const auto& [lam, c] : e_in_p(r - i))
        out[with_part_added(lam, i)] += sign * c;
    }
    for (auto& [lam, c] : out) c /= r;
  }
  return cache.emplace(r, std::move(out)).first->second;
}

// r h_r = sum_{i=1}^{r} p_i h_{r-i}
const Terms& h_in_p(int r) {
  static std::map<int, Terms> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Terms out;
  if (r == 0) {
    out.emplace(Partition{}, Rational(1));
  } else {
    for (int i = 1; i <= r; ++i)
      for (const auto& [lam, c] : h_in_p(r - i))
        out[with_part_added(lam, i)] += c;
    for (auto& [lam, c] : out) c /= r;
  }
  return cache.emplace(r, std::move(out)).first->second;
}

// p_r = sum_{i=1}^{r-1} (-1)^{i-1} e_i p_{r-i} + (-1)^{r-1} r e_r
const Terms& p_in_e(int r) {
  static std::map<int, Terms> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Terms out;
  if (r == 0) {
    out.emplace(Partition{}, Rational(1));
  } else {
    for (int i = 1; i < r; ++i) {
      Rational sign((i % 2) ? 1 : -1);
      for (const auto& [lam, c] : p_in_e(r - i))
        out[with_part_added(lam, i)] += sign * c;
    }
    out[Partition{r}] += Rational((r % 2) ? r : -r);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
  return cache.emplace(r, std::move(out)).first->second;
}

// p_r = r h_r - sum_{i=1}^{r-1} h_i p_{r-i}
const Terms& p_in_h(int r) {
  static std::map<int, Terms> cache;
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  Terms out;
  if (r == 0) {
    out.emplace(Partition{}, Rational(1));
  } else {
    for (int i = 1; i < r; ++i)
      for (const auto& [lam, c] : p_in_h(r - i))
        out[with_part_added(lam, i)] += Rational(-c);
    out[Partition{r}] += Rational(r);
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  }
  return cache.emplace(r, std::move(out)).first->second;
}

// --- dense linear algebra ----------------------------------------------------

std::vector<std::vector<Rational>> invert_matrix(std::vector<std::vector<Rational>> A) {
  size_t n = A.size();
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("invert_matrix: singular");
    std::swap(A[piv], A[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = A[col][col];
    for (size_t j = 0; j < n; ++j) {
      A[col][j] /= d;
      inv[col][j] /= d;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      Rational f = A[r][col];
      for (size_t j = 0; j < n; ++j) {
        A[r][j] -= f * A[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// --- per-degree m <-> p tables ----------------------------------------------

struct PMTables {
  std::vector<Partition> parts;  // reverse-lex, largest first
  std::map<Partition, int> index;
  std::vector<Terms> p_rows;                     // p_lam in the m basis
  std::vector<std::vector<Rational>> m_in_p;     // m_mu over the p index
};

const PMTables& pm_tables(int d) {
  static std::map<int, PMTables> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  PMTables t;
  t.parts = partitions_of(d);
  size_t n = t.parts.size();
  for (size_t i = 0; i < n; ++i) t.index.emplace(t.parts[i], static_cast<int>(i));
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    Terms row{{Partition{}, Rational(1)}};
    for (int r : t.parts[i].parts()) row = multiply_by_p_in_m(row, r);
    for (const auto& [mu, c] : row) M[i][t.index.at(mu)] = c;
    t.p_rows.push_back(std::move(row));
  }
  t.m_in_p = invert_matrix(std::move(M));
  return cache.emplace(d, std::move(t)).first->second;
}

// --- s <-> h tables -----------------------------------------------------------

SymFunc schur_unlocked(const Partition& lam);

struct SHTables {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  std::vector<Terms> s_rows;                     // s_lam in the h basis
  std::vector<std::vector<Rational>> h_in_s;
};

const SHTables& sh_tables(int d) {
  static std::map<int, SHTables> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  SHTables t;
  t.parts = partitions_of(d);
  size_t n = t.parts.size();
  for (size_t i = 0; i < n; ++i) t.index.emplace(t.parts[i], static_cast<int>(i));
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    Terms row = schur_unlocked(t.parts[i]).terms();
    for (const auto& [mu, c] : row) M[i][t.index.at(mu)] = c;
    t.s_rows.push_back(std::move(row));
  }
  t.h_in_s = invert_matrix(std::move(M));
  return cache.emplace(d, std::move(t)).first->second;
}

// --- basis conversion ---------------------------------------------------------

// expand one basis element of weight-homogeneous data into p
Terms to_p_terms(Basis b, const Terms& terms) {
  Terms out;
  auto bump = [&out](const Partition& lam, const Rational& c) {
    auto [it, fresh] = out.emplace(lam, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  switch (b) {
    case Basis::P:
      return terms;
    case Basis::E:
    case Basis::H: {
      for (const auto& [lam, c] : terms) {
        Terms prod{{Partition{}, c}};
        for (int r : lam.parts())
          prod = concat_product(prod, b == Basis::E ? e_in_p(r) : h_in_p(r));
        for (const auto& [mu, k] : prod) bump(mu, k);
      }
      return out;
    }
    case Basis::M: {
      // degree by degree through the inverse table
      std::map<int, Terms> by_weight;
      for (const auto& [lam, c] : terms) by_weight[lam.weight()].emplace(lam, c);
      for (const auto& [d, grp] : by_weight) {
        const PMTables& t = pm_tables(d);
        for (const auto& [mu, c] : grp) {
          const auto& row = t.m_in_p[t.index.at(mu)];
          for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) bump(t.parts[j], Rational(c * row[j]));
        }
      }
      return out;
    }
    case Basis::S: {
      std::map<int, Terms> by_weight;
      for (const auto& [lam, c] : terms) by_weight[lam.weight()].emplace(lam, c);
      Terms in_h;
      for (const auto& [d, grp] : by_weight) {
        const SHTables& t = sh_tables(d);
        for (const auto& [mu, c] : grp)
          for (const auto& [nu, k] : t.s_rows[t.index.at(mu)]) {
            auto [it, fresh] = in_h.emplace(nu, Rational(c * k));
            if (!fresh) it->second += c * k;
          }
      }
      std::erase_if(in_h, [](const auto& kv) { return kv.second == 0; });
      return to_p_terms(Basis::H, in_h);
    }
  }
  throw std::logic_error("unreachable");
}

Terms from_p_terms(Basis b, const Terms& terms) {
  Terms out;
  auto bump = [&out](const Partition& lam, const Rational& c) {
    auto [it, fresh] = out.emplace(lam, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.erase(it);
    }
  };
  switch (b) {
    case Basis::P:
      return terms;
    case Basis::E:
    case Basis::H: {
      for (const auto& [lam, c] : terms) {
        Terms prod{{Partition{}, c}};
        for (int r : lam.parts())
          prod = concat_product(prod, b == Basis::E ? p_in_e(r) : p_in_h(r));
        for (const auto& [mu, k] : prod) bump(mu, k);
      }
      return out;
    }
    case Basis::M: {
      std::map<int, Terms> by_weight;
      for (const auto& [lam, c] : terms) by_weight[lam.weight()].emplace(lam, c);
      for (const auto& [d, grp] : by_weight) {
        const PMTables& t = pm_tables(d);
        for (const auto& [lam, c] : grp)
          for (const auto& [mu, k] : t.p_rows[t.index.at(lam)])
            bump(mu, Rational(c * k));
      }
      return out;
    }
    case Basis::S: {
      Terms in_h = from_p_terms(Basis::H, terms);
      std::map<int, Terms> by_weight;
      for (const auto& [lam, c] : in_h) by_weight[lam.weight()].emplace(lam, c);
      for (const auto& [d, grp] : by_weight) {
        const SHTables& t = sh_tables(d);
        for (const auto& [mu, c] : grp) {
          const auto& row = t.h_in_s[t.index.at(mu)];
          for (size_t j = 0; j < row.size(); ++j)
            if (row[j] != 0) bump(t.parts[j], Rational(c * row[j]));
        }
      }
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

SymFunc SymFunc::to_basis(Basis target) const {
  if (target == basis_ || is_scalar()) {
    SymFunc r(target);
    r.terms_ = terms_;
    return r;
  }
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  SymFunc r(target);
  r.terms_ = from_p_terms(target, to_p_terms(basis_, terms_));
  return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
  if (is_zero()) return SymFunc(o.basis_);
  if (o.is_zero()) return SymFunc(basis_);
  if (is_scalar()) return o * coefficient(Partition{});
  if (o.is_scalar()) return *this * o.coefficient(Partition{});
  if (basis_ == o.basis_ &&
      (basis_ == Basis::E || basis_ == Basis::H || basis_ == Basis::P)) {
    SymFunc r(basis_);
    r.terms_ = concat_product(terms_, o.terms_);
    return r;
  }
  SymFunc a = to_basis(Basis::P), b = o.to_basis(Basis::P);
  SymFunc r(Basis::P);
  r.terms_ = concat_product(a.terms_, b.terms_);
  return r;
}

// ---------------------------------------------------------------------------
// generators

SymFunc e_sf(int r) {
  if (r < 0) return SymFunc::zero(Basis::E);
  return SymFunc::generator(Basis::E, r == 0 ? Partition{} : Partition{r});
}

SymFunc h_sf(int r) {
  if (r < 0) return SymFunc::zero(Basis::H);
  return SymFunc::generator(Basis::H, r == 0 ? Partition{} : Partition{r});
}

SymFunc p_sf(int r) {
  if (r < 0) throw std::invalid_argument("p_sf: negative index");
  return SymFunc::generator(Basis::P, r == 0 ? Partition{} : Partition{r});
}

SymFunc e_sf(const Partition& lam) { return SymFunc::generator(Basis::E, lam); }
SymFunc h_sf(const Partition& lam) { return SymFunc::generator(Basis::H, lam); }
SymFunc p_sf(const Partition& lam) { return SymFunc::generator(Basis::P, lam); }
SymFunc m_sf(const Partition& lam) { return SymFunc::generator(Basis::M, lam); }

// ---------------------------------------------------------------------------
// Schur functions

namespace {

// signed permutation expansion of det(entry(row, col)) where a negative
// index kills the entry; index 0 contributes an empty factor
SymFunc det_multiplicative(Basis b, const std::vector<std::vector<int>>& idx) {
  int n = static_cast<int>(idx.size());
  SymFunc out(b);
  std::vector<int> col(n, -1);
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int row) -> void {
    if (row == n) {
      int inv = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (col[i] > col[j]) ++inv;
      std::vector<int> parts;
      for (int i = 0; i < n; ++i)
        if (idx[i][col[i]] > 0) parts.push_back(idx[i][col[i]]);
      std::sort(parts.begin(), parts.end(), std::greater<int>());
      out.add_term(Partition(std::move(parts)), Rational(inv % 2 ? -1 : 1));
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || idx[row][j] < 0) continue;
      used[j] = true;
      col[row] = j;
      self(self, row + 1);
      used[j] = false;
    }
  };
  rec(rec, 0);
  return out;
}

SymFunc schur_unlocked(const Partition& lam) {
  int l = lam.length();
  if (l == 0) return SymFunc::one(Basis::H);
  std::vector<std::vector<int>> idx(l, std::vector<int>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) idx[i][j] = lam.parts()[i] - i + j;
  return det_multiplicative(Basis::H, idx);
}

}  // namespace

SymFunc schur(const Partition& lam) { return schur_unlocked(lam); }

SymFunc schur_dual(const Partition& lam, int n) {
  if (lam.part(0) > n)
    throw std::invalid_argument("schur_dual: conjugate does not fit in n rows");
  Partition conj = lam.conjugate();
  if (n == 0) return SymFunc::one(Basis::E);
  std::vector<std::vector<int>> idx(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) idx[i][j] = conj.part(i) - i + j;
  return det_multiplicative(Basis::E, idx);
}

// ---------------------------------------------------------------------------
// alphabet operations

SymFunc omega_alpha(const SymFunc& f, const Rational& alpha) {
  SymFunc pf = f.to_basis(Basis::P);
  SymFunc out(Basis::P);
  for (const auto& [lam, c] : pf.terms()) {
    int flip = (lam.weight() - lam.length()) % 2;
    Rational factor = pow_rational(alpha, lam.length());
    out.add_term(lam, Rational(c * factor * (flip ? -1 : 1)));
  }
  return out;
}

SymFunc negate_alphabet(const SymFunc& f) {
  SymFunc pf = f.to_basis(Basis::P);
  SymFunc out(Basis::P);
  for (const auto& [lam, c] : pf.terms())
    out.add_term(lam, Rational(lam.length() % 2 ? -c : c));
  return out;
}

Rational scalar_alpha(const SymFunc& f, const SymFunc& g, const Rational& alpha) {
  if (alpha == 0) throw std::invalid_argument("scalar_alpha: alpha must be nonzero");
  SymFunc pf = f.to_basis(Basis::P), pg = g.to_basis(Basis::P);
  Rational total(0);
  for (const auto& [lam, cf] : pf.terms()) {
    Rational cg = pg.coefficient(lam);
    if (cg == 0) continue;
    total += cf * cg * Rational(z_lambda(lam)) * pow_rational(alpha, lam.length());
  }
  return total;
}

Rational evaluate(const SymFunc& f, const std::vector<Rational>& values) {
  SymFunc pf = f.to_basis(Basis::P);
  std::map<int, Rational> psums;
  auto psum = [&](int r) -> const Rational& {
    auto it = psums.find(r);
    if (it != psums.end()) return it->second;
    Rational s(0);
    for (const auto& v : values) s += pow_rational(v, r);
    return psums.emplace(r, std::move(s)).first->second;
  };
  Rational total(0);
  for (const auto& [lam, c] : pf.terms()) {
    Rational t = c;
    for (int r : lam.parts()) t *= psum(r);
    total += t;
  }
  return total;
}

LaurentPoly realize(const SymFunc& f, int nvars) {
  SymFunc mf = f.to_basis(Basis::M);
  LaurentPoly out(nvars);
  for (const auto& [lam, c] : mf.terms()) {
    if (lam.length() > nvars) continue;
    std::vector<int> expo(nvars, 0);
    for (int i = 0; i < lam.length(); ++i) expo[i] = lam.parts()[i];
    std::sort(expo.begin(), expo.end());
    do {
      out.add_term(expo, c);
    } while (std::next_permutation(expo.begin(), expo.end()));
  }
  return out;
}

SymFunc from_polynomial(const LaurentPoly& poly) {
  SymFunc out(Basis::M);
  for (const auto& [e, c] : poly.terms()) {
    bool decreasing = true;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] < 0) throw std::invalid_argument("from_polynomial: negative exponent");
      if (i > 0 && e[i] > e[i - 1]) decreasing = false;
    }
    if (!decreasing) continue;
    out.add_term(Partition(e), c);
  }
  if (!(realize(out, poly.nvars()) == poly))
    throw std::invalid_argument("from_polynomial: input is not symmetric");
  return out;
}

LaurentPoly ct_kernel(int n, int k) {
  if (k < 0) throw std::invalid_argument("ct_kernel: negative exponent");
  LaurentPoly prod = LaurentPoly::constant(n, Rational(1));
  for (int i = 0; i < n; ++i) {
    LaurentPoly factor = LaurentPoly::constant(n, Rational(1));
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      LaurentPoly::Exponents e(n, 0);
      e[i] = 1;
      e[j] = -1;
      factor = factor * (LaurentPoly::constant(n, Rational(1)) -
                         LaurentPoly::monomial(n, e, Rational(1)));
    }
    prod = prod * factor.pow(k);
  }
  return prod;
}

Rational scalar_prime(const SymFunc& f, const SymFunc& g, int n, int k) {
  LaurentPoly fx = realize(f, n);
  LaurentPoly gx = realize(g, n).invert_alphabet();
  Rational ct = (fx * gx * ct_kernel(n, k)).constant_term();
  return ct / Rational(factorial(static_cast<unsigned long>(n)));
}

Rational elementary_value(const std::vector<Rational>& values, int p) {
  if (p < 0 || p > static_cast<int>(values.size())) return Rational(0);
  // coefficients of prod (1 + v t)
  std::vector<Rational> coeff(values.size() + 1, Rational(0));
  coeff[0] = 1;
  size_t used = 0;
  for (const auto& v : values) {
    ++used;
    for (size_t j = used; j >= 1; --j) coeff[j] += v * coeff[j - 1];
  }
  return coeff[p];
}

Rational complete_value(const std::vector<Rational>& values, int p) {
  if (p < 0) return Rational(0);
  if (p == 0) return Rational(1);
  // h_p via Newton from power sums
  std::vector<Rational> h(p + 1, Rational(0));
  h[0] = 1;
  std::vector<Rational> psum(p + 1, Rational(0));
  for (int r = 1; r <= p; ++r)
    for (const auto& v : values) psum[r] += pow_rational(v, r);
  for (int d = 1; d <= p; ++d) {
    Rational s(0);
    for (int i = 1; i <= d; ++i) s += psum[i] * h[d - i];
    h[d] = s / d;
  }
  return h[p];
}

Rational lambda_value(const Alphabet& X, int p) {
  if (p < 0) return Rational(0);
  if (p == 0) return Rational(1);
  switch (X.kind) {
    case Alphabet::Kind::AZero:
      return Rational(0);
    case Alphabet::Kind::FiniteValues:
      return elementary_value(X.values, p);
    case Alphabet::Kind::FormalInfinite:
      throw std::invalid_argument("lambda_value: formal alphabet has no numeric value");
  }
  throw std::logic_error("unreachable");
}

SymFunc lambda_formal(const Alphabet& X, int p) {
  if (X.kind == Alphabet::Kind::FormalInfinite) return e_sf(p);
  return SymFunc::one(Basis::E) * lambda_value(X, p);
}

LaurentPoly schur_laurent(const ShiftVector& v, int n) {
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("schur_laurent: vector length must be n");
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[i - 1])
      throw std::invalid_argument("schur_laurent: vector must be weakly decreasing");
  ShiftVector w(n);
  for (int i = 0; i < n; ++i) w[i] = v[i] + n - 1 - i;
  return divide_exact(alternant(w), vandermonde(n));
}

LaurentPoly schur_laurent(const Partition& lam, int n) {
  if (lam.length() > n)
    throw std::invalid_argument("schur_laurent: partition longer than n");
  ShiftVector v(n);
  for (int i = 0; i < n; ++i) v[i] = lam.part(i);
  return schur_laurent(v, n);
}

bool equivalent(const SymFunc& a, const SymFunc& b) {
  if (a.basis() == b.basis()) return a == b;
  return a == b.to_basis(a.basis());
}

std::string to_string(const SymFunc& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (const auto& [lam, c] : f.terms()) {
    if (!s.empty()) s += " + ";
    s += to_string(c) + "*" + basis_to_char(f.basis()) + lam.to_string();
  }
  return s;
}

}  // namespace hyperjack
