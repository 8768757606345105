#pragma once

// Dense hyperdeterminants over an exact ring.
//
// For a tensor M of even order 2k and dimension n,
//
//   Det M = (1/n!) * sum over all tuples (s_1,...,s_2k) of permutations
//           of sign(s_1)...sign(s_2k) * prod_i M[s_1(i),...,s_2k(i)].
//
// Composing every s_j with the same tau multiplies the sign by sign(tau)^2k
// and permutes the product factors, so each summand appears n! times; the
// reduced form pins s_1 = id and drops the 1/n!. For odd order the same
// pairing (compose with a fixed transposition) flips the sign, so the value
// is identically zero; det() accepts odd order and returns the ring zero.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "hyperjack/laurent.hpp"
#include "hyperjack/partition.hpp"
#include "hyperjack/rational.hpp"

namespace hyperjack {

// m -> Lambda^m(Y) (or m -> S^m(X) for the complete-function variant); must
// return ring zero for negative m and ring one at m = 0 on normalized
// alphabets
template <RingElement R>
using LambdaGenerator = std::function<R(long)>;

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p); while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int permutation_sign(const std::vector<int>& p) {
  int inv = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

template <RingElement R>
class HyperTensor {
 public:
  HyperTensor(int order, int dim)
      : order_(order), dim_(dim), entries_(checked_size(order, dim), RingTraits<R>::zero()) {}

  // row-major: the last index varies fastest
  static HyperTensor from_entries(int order, int dim, std::vector<R> entries) {
    HyperTensor t(order, dim);
    if (entries.size() != t.entries_.size())
      throw std::invalid_argument("tensor entries: wrong count for order/dim");
    t.entries_ = std::move(entries);
    return t;
  }

  // fill from a function of the index tuple
  template <class F>
  static HyperTensor build(int order, int dim, F&& f) {
    HyperTensor t(order, dim);
    std::vector<int> idx(static_cast<size_t>(order), 0);
    size_t pos = 0;
    for (;;) {
      t.entries_[pos++] = f(static_cast<const std::vector<int>&>(idx));
      int j = order - 1;
      while (j >= 0 && ++idx[static_cast<size_t>(j)] == dim) idx[static_cast<size_t>(j--)] = 0;
      if (j < 0) break;
    }
    return t;
  }

  int order() const { return order_; }
  int dim() const { return dim_; }
  const std::vector<R>& entries() const { return entries_; }
  std::vector<R>& entries() { return entries_; }

  R& at(const std::vector<int>& idx) { return entries_[offset(idx)]; }
  const R& at(const std::vector<int>& idx) const { return entries_[offset(idx)]; }

  bool operator==(const HyperTensor&) const = default;

 private:
  static size_t checked_size(int order, int dim) {
    if (order < 1 || dim < 1)
      throw std::invalid_argument("tensor: order and dim must be positive");
    size_t s = 1;
    for (int i = 0; i < order; ++i) {
      if (s > (size_t{1} << 40) / static_cast<size_t>(dim))
        throw std::invalid_argument("tensor: too many entries");
      s *= static_cast<size_t>(dim);
    }
    return s;
  }

  size_t offset(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != order_)
      throw std::out_of_range("tensor index: wrong arity");
    size_t off = 0;
    for (int a : idx) {
      if (a < 0 || a >= dim_) throw std::out_of_range("tensor index out of range");
      off = off * static_cast<size_t>(dim_) + static_cast<size_t>(a);
    }
    return off;
  }

  int order_;
  int dim_;
  std::vector<R> entries_;
};

enum class DetStrategy { Naive, Reduced, Parallel };

namespace detail {

// Reduced sum restricted to one choice c for the first free coordinate:
// s_1 = id, s_2 = perms[c], the remaining order-2 slots range over all perms.
template <RingElement R>
R reduced_sum_for_first(const HyperTensor<R>& t, const std::vector<std::vector<int>>& perms,
                        const std::vector<int>& signs, size_t c) {
  const int n = t.dim();
  const int rest = t.order() - 2;
  std::vector<size_t> pick(static_cast<size_t>(rest), 0);
  std::vector<int> idx(static_cast<size_t>(t.order()));
  R acc = RingTraits<R>::zero();
  for (;;) {
    int sign = signs[c];
    for (size_t a : pick) sign *= signs[a];
    R term = RingTraits<R>::one();
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      idx[0] = i;
      idx[1] = perms[c][static_cast<size_t>(i)];
      for (int s = 0; s < rest; ++s)
        idx[static_cast<size_t>(s) + 2] = perms[pick[static_cast<size_t>(s)]][static_cast<size_t>(i)];
      term = R(term * t.at(idx));
      dead = RingTraits<R>::is_zero(term);
    }
    if (!dead) {
      if (sign < 0) term = RingTraits<R>::scale(term, Rational(-1));
      acc = R(acc + term);
    }
    int j = rest - 1;
    while (j >= 0 && ++pick[static_cast<size_t>(j)] == perms.size()) pick[static_cast<size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return acc;
}

// full (n!)^order sum, then divide by n!; works for any order
template <RingElement R>
R naive_sum(const HyperTensor<R>& t) {
  const int n = t.dim();
  const int m = t.order();
  auto perms = all_permutations(n);
  std::vector<int> signs(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) signs[i] = permutation_sign(perms[i]);
  std::vector<size_t> pick(static_cast<size_t>(m), 0);
  std::vector<int> idx(static_cast<size_t>(m));
  R acc = RingTraits<R>::zero();
  for (;;) {
    int sign = 1;
    for (size_t a : pick) sign *= signs[a];
    R term = RingTraits<R>::one();
    bool dead = false;
    for (int i = 0; i < n && !dead; ++i) {
      for (int s = 0; s < m; ++s)
        idx[static_cast<size_t>(s)] = perms[pick[static_cast<size_t>(s)]][static_cast<size_t>(i)];
      term = R(term * t.at(idx));
      dead = RingTraits<R>::is_zero(term);
    }
    if (!dead) {
      if (sign < 0) term = RingTraits<R>::scale(term, Rational(-1));
      acc = R(acc + term);
    }
    int j = m - 1;
    while (j >= 0 && ++pick[static_cast<size_t>(j)] == perms.size()) pick[static_cast<size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return RingTraits<R>::scale(acc, make_rational(Integer(1), factorial(static_cast<unsigned long>(n))));
}

}  // namespace detail

template <RingElement R>
R det(const HyperTensor<R>& t, DetStrategy strategy = DetStrategy::Reduced, int threads = 1) {
  if (strategy == DetStrategy::Naive) return detail::naive_sum(t);
  if (t.order() % 2 != 0) return RingTraits<R>::zero();
  auto perms = all_permutations(t.dim());
  std::vector<int> signs(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) signs[i] = permutation_sign(perms[i]);

  if (strategy == DetStrategy::Reduced || threads <= 1) {
    R acc = RingTraits<R>::zero();
    for (size_t c = 0; c < perms.size(); ++c)
      acc = R(acc + detail::reduced_sum_for_first(t, perms, signs, c));
    return acc;
  }

  // One partial per value of the first free coordinate, folded in ascending
  // order after all workers finish, so the result is independent of the
  // worker count and of scheduling.
  std::vector<R> parts(perms.size(), RingTraits<R>::zero());
  std::atomic<size_t> cursor{0};
  auto work = [&]() {
    for (;;) {
      size_t c = cursor.fetch_add(1);
      if (c >= parts.size()) return;
      parts[c] = detail::reduced_sum_for_first(t, perms, signs, c);
    }
  };
  int extra = std::min<int>(threads, static_cast<int>(parts.size())) - 1;
  std::vector<std::thread> pool;
  for (int i = 0; i < extra; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  R acc = RingTraits<R>::zero();
  for (const R& part : parts) acc = R(acc + part);
  return acc;
}

// Runs one strategy and reports the value with its timing and the number of
// permutation tuples the strategy sums over.
template <RingElement R>
struct DetRun {
  R value = RingTraits<R>::zero();
  double ms = 0;
  unsigned long long terms = 0;
};

template <RingElement R>
DetRun<R> det_strategy_bench(const HyperTensor<R>& t, DetStrategy strategy, int threads = 1) {
  using clock = std::chrono::steady_clock;
  DetRun<R> out;
  auto t0 = clock::now();
  out.value = det(t, strategy, threads);
  auto t1 = clock::now();
  out.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  unsigned long long fact = 1;
  for (int i = 2; i <= t.dim(); ++i) fact *= static_cast<unsigned long long>(i);
  out.terms = 1;
  for (int j = 0; j < t.order(); ++j) out.terms *= fact;
  if (strategy != DetStrategy::Naive) out.terms = t.order() % 2 ? 0 : out.terms / fact;
  return out;
}

// In a Hankel/Toeplitz tensor the entry at (i_1,...,i_m) is gen applied to a
// sum of per-position shifts: w_1[i_1] + ... + w_m[i_m].
inline std::vector<ShiftVector> hankel_shift_vectors(int k, int n, const ShiftVector& v) {
  if (k < 1 || n < 1) throw std::invalid_argument("hankel: k and n must be positive");
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("hankel: shift vector must have length n");
  ShiftVector ramp(static_cast<size_t>(n));
  std::iota(ramp.begin(), ramp.end(), 0);
  std::vector<ShiftVector> ws(static_cast<size_t>(2 * k), ramp);
  for (int i = 0; i < n; ++i) ws[0][static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
  return ws;
}

inline std::vector<ShiftVector> toeplitz_shift_vectors(int k, int n, const ShiftVector& v) {
  if (k < 1 || n < 1) throw std::invalid_argument("toeplitz: k and n must be positive");
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("toeplitz: shift vector must have length n");
  ShiftVector ramp(static_cast<size_t>(n));
  std::iota(ramp.begin(), ramp.end(), 0);
  std::vector<ShiftVector> ws(static_cast<size_t>(2 * k), ramp);
  for (int j = k; j < 2 * k; ++j)
    for (int i = 0; i < n; ++i) ws[static_cast<size_t>(j)][static_cast<size_t>(i)] = -i;
  for (int i = 0; i < n; ++i) ws[0][static_cast<size_t>(i)] += v[static_cast<size_t>(i)];
  return ws;
}

template <RingElement R>
HyperTensor<R> tensor_from_shift_vectors(const std::vector<ShiftVector>& ws,
                                         const LambdaGenerator<R>& gen) {
  if (ws.empty()) throw std::invalid_argument("tensor_from_shift_vectors: no vectors");
  const int m = static_cast<int>(ws.size());
  const int n = static_cast<int>(ws[0].size());
  for (const auto& w : ws)
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("tensor_from_shift_vectors: ragged vectors");
  return HyperTensor<R>::build(m, n, [&](const std::vector<int>& idx) {
    long s = 0;
    for (int j = 0; j < m; ++j) s += ws[static_cast<size_t>(j)][static_cast<size_t>(idx[static_cast<size_t>(j)])];
    return gen(s);
  });
}

// entry (i_1,...,i_2k) -> gen(i_1 + ... + i_2k + v[i_1])
template <RingElement R>
HyperTensor<R> hankel(int k, int n, const ShiftVector& v, const LambdaGenerator<R>& gen) {
  return tensor_from_shift_vectors(hankel_shift_vectors(k, n, v), gen);
}

// entry (i_1,...,i_2k) -> gen(i_1+...+i_k - i_{k+1}-...-i_2k + v[i_1])
template <RingElement R>
HyperTensor<R> toeplitz(int k, int n, const ShiftVector& v, const LambdaGenerator<R>& gen) {
  return tensor_from_shift_vectors(toeplitz_shift_vectors(k, n, v), gen);
}

// Reduced-sum determinant evaluated straight from the shift structure. The
// product along a permutation tuple depends only on the multiset of generator
// arguments, so tuple products are cached under the sorted argument vector;
// this is what makes formal (SymFunc-entried) determinants affordable.
template <RingElement R>
R det_shifted(const std::vector<ShiftVector>& ws, const LambdaGenerator<R>& gen) {
  if (ws.empty()) throw std::invalid_argument("det_shifted: no vectors");
  const int m = static_cast<int>(ws.size());
  const int n = static_cast<int>(ws[0].size());
  for (const auto& w : ws)
    if (static_cast<int>(w.size()) != n)
      throw std::invalid_argument("det_shifted: ragged vectors");
  if (m % 2 != 0) return RingTraits<R>::zero();
  auto perms = all_permutations(n);
  std::vector<int> signs(perms.size());
  for (size_t i = 0; i < perms.size(); ++i) signs[i] = permutation_sign(perms[i]);

  std::map<long, R> entry_memo;
  auto entry = [&](long p) -> const R& {
    auto it = entry_memo.find(p);
    if (it == entry_memo.end()) it = entry_memo.emplace(p, gen(p)).first;
    return it->second;
  };
  std::map<std::vector<long>, R> product_memo;

  std::vector<size_t> pick(static_cast<size_t>(m - 1), 0);
  std::vector<long> args(static_cast<size_t>(n));
  R acc = RingTraits<R>::zero();
  for (;;) {
    int sign = 1;
    for (size_t a : pick) sign *= signs[a];
    for (int i = 0; i < n; ++i) {
      long s = ws[0][static_cast<size_t>(i)];
      for (int j = 1; j < m; ++j)
        s += ws[static_cast<size_t>(j)][static_cast<size_t>(perms[pick[static_cast<size_t>(j - 1)]][static_cast<size_t>(i)])];
      args[static_cast<size_t>(i)] = s;
    }
    std::vector<long> key = args;
    std::sort(key.begin(), key.end());
    auto it = product_memo.find(key);
    if (it == product_memo.end()) {
      R prod = RingTraits<R>::one();
      for (long s : key) {
        prod = R(prod * entry(s));
        if (RingTraits<R>::is_zero(prod)) break;
      }
      it = product_memo.emplace(std::move(key), std::move(prod)).first;
    }
    if (!RingTraits<R>::is_zero(it->second)) {
      R term = it->second;
      if (sign < 0) term = RingTraits<R>::scale(term, Rational(-1));
      acc = R(acc + term);
    }
    int j = m - 2;
    while (j >= 0 && ++pick[static_cast<size_t>(j)] == perms.size()) pick[static_cast<size_t>(j--)] = 0;
    if (j < 0) break;
  }
  return acc;
}

// monomial-wise substitution x_1^{p_1}...x_n^{p_n} -> gen(p_1)*...*gen(p_n);
// gen values are memoised per exponent
template <RingElement R>
R umbral(const LaurentPoly& f, const LambdaGenerator<R>& gen) {
  std::map<long, R> memo;
  auto cached = [&](long p) -> const R& {
    auto it = memo.find(p);
    if (it == memo.end()) it = memo.emplace(p, gen(p)).first;
    return it->second;
  };
  R acc = RingTraits<R>::zero();
  for (const auto& [exps, coeff] : f.terms()) {
    R term = RingTraits<R>::one();
    bool dead = false;
    for (int p : exps) {
      term = R(term * cached(p));
      if (RingTraits<R>::is_zero(term)) { dead = true; break; }
    }
    if (!dead) acc = R(acc + RingTraits<R>::scale(term, coeff));
  }
  return acc;
}

}  // namespace hyperjack
