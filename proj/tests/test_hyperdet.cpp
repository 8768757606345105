#include <doctest.h>

#include <random>

#include "hyperjack/hyperdet.hpp"
#include "hyperjack/symfunc.hpp"

using namespace hyperjack;

namespace {

LambdaGenerator<Rational> values_gen(std::vector<Rational> vals) {
  return [vals = std::move(vals)](long p) { return elementary_value(vals, static_cast<int>(p)); };
}

LambdaGenerator<SymFunc> formal_gen() {
  return [](long p) { return lambda_formal(Alphabet::formal(), static_cast<int>(p)); };
}

HyperTensor<Rational> random_tensor(std::mt19937& rng, int order, int dim) {
  std::uniform_int_distribution<long> num(-4, 4), den(1, 4);
  return HyperTensor<Rational>::build(order, dim, [&](const std::vector<int>&) {
    return make_rational(num(rng), den(rng));
  });
}

// cofactor expansion along the first row, as an independent order-2 oracle
Rational cofactor_det(const HyperTensor<Rational>& t) {
  const int n = t.dim();
  if (n == 1) return t.at({0, 0});
  Rational acc(0);
  for (int j = 0; j < n; ++j) {
    HyperTensor<Rational> minor(2, n - 1);
    for (int r = 1; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at({r - 1, c < j ? c : c - 1}) = t.at({r, c});
      }
    Rational term = t.at({0, j}) * cofactor_det(minor);
    acc += (j % 2 ? -term : term);
  }
  return acc;
}

const std::vector<Rational> kX12 = {Rational(1), Rational(2)};
const std::vector<Rational> kX3 = {Rational(1), make_rational(1, 2), Rational(3)};

}  // namespace

TEST_CASE("det basics") {
  for (int n = 1; n <= 3; ++n) {
    auto id = HyperTensor<Rational>::build(2, n, [](const std::vector<int>& i) {
      return Rational(i[0] == i[1] ? 1 : 0);
    });
    CHECK(det(id) == 1);
  }
  auto ones = HyperTensor<Rational>::build(4, 2, [](const std::vector<int>&) { return Rational(1); });
  CHECK(det(ones) == 0);
  CHECK_THROWS_AS(HyperTensor<Rational>(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(HyperTensor<Rational>::from_entries(2, 2, {Rational(1)}), std::invalid_argument);
}

TEST_CASE("order 2 matches the cofactor oracle") {
  std::mt19937 rng(51);
  for (int n : {3, 4})
    for (int t = 0; t < 5; ++t) {
      auto m = random_tensor(rng, 2, n);
      Rational ref = cofactor_det(m);
      CHECK(det(m, DetStrategy::Reduced) == ref);
      CHECK(det(m, DetStrategy::Naive) == ref);
    }
}

TEST_CASE("hankel tensors") {
  SymFunc h2 = det(hankel(1, 2, {0, 0}, formal_gen()));
  CHECK(h2 == e_sf(2) - e_sf(1) * e_sf(1));

  auto one_by_one = hankel(2, 1, {5}, values_gen(kX3));
  CHECK(det(one_by_one) == elementary_value(kX3, 5));

  // the shift rides on the first index only
  auto shifted = hankel(1, 2, {1, 0}, formal_gen());
  CHECK(shifted.at({1, 0}) == lambda_formal(Alphabet::formal(), 1));
  CHECK(shifted.at({0, 1}) == lambda_formal(Alphabet::formal(), 2));

  CHECK(det(hankel(1, 2, {0, 0}, values_gen(kX12))) == -7);
  CHECK(det(hankel(2, 2, {0, 0}, values_gen(kX12))) == 12);
  CHECK(det(hankel(1, 3, {0, 0, 0}, values_gen(kX3))) == make_rational(-239, 4));
  CHECK(det(hankel(2, 3, {0, 0, 0}, values_gen(kX3))) == 0);
  CHECK_THROWS_AS(hankel(1, 2, {0}, values_gen(kX12)), std::invalid_argument);
}

TEST_CASE("toeplitz tensors") {
  CHECK(det(toeplitz(1, 2, {0, 0}, formal_gen())) == SymFunc::one(Basis::E));
  CHECK(det(toeplitz(1, 1, {3}, values_gen(kX3))) == elementary_value(kX3, 3));
  CHECK(det(toeplitz(1, 2, {1, 0}, values_gen(kX12))) == 0);
  CHECK(det(toeplitz(2, 2, {1, 2}, values_gen(kX12))) == 12);
  SymFunc t11 = det(toeplitz(1, 2, {1, 1}, formal_gen())).to_basis(Basis::M);
  CHECK(t11.coefficient(Partition({2})) == 1);
  CHECK(t11.coefficient(Partition({1, 1})) == 1);
  CHECK(t11.terms().size() == 2);
}

TEST_CASE("umbral substitution") {
  CHECK(umbral(LaurentPoly::constant(2, make_rational(3, 7)), values_gen(kX12)) ==
        make_rational(3, 7));
  LambdaGenerator<Rational> azero = [](long p) { return Rational(p == 0 ? 1 : 0); };
  CHECK(umbral(LaurentPoly::variable(1, 0, 3), azero) == 0);
  CHECK(umbral(LaurentPoly::variable(1, 0, -2), azero) == 0);
  SymFunc sub = umbral(vandermonde(2).pow(2), formal_gen()) * make_rational(1, 2);
  CHECK(sub == e_sf(2) - e_sf(1) * e_sf(1));
}

TEST_CASE("hankel det is an umbral vandermonde power") {
  // order 4, dim 2, entries from the values of {1,2}
  Rational lhs = det(hankel(2, 2, {0, 0}, values_gen(kX12)));
  Rational rhs = umbral(vandermonde(2).pow(4), values_gen(kX12)) * make_rational(1, 2);
  CHECK(lhs == rhs);
  CHECK(lhs == 12);
}

TEST_CASE("strategies agree") {
  std::mt19937 rng(57);
  int built = 0;
  while (built < 20) {
    int order = 2 + 2 * (built % 2);
    int dim = 2 + built % 2;
    auto t = random_tensor(rng, order, dim);
    auto naive = det_strategy_bench(t, DetStrategy::Naive);
    auto reduced = det_strategy_bench(t, DetStrategy::Reduced);
    auto parallel = det_strategy_bench(t, DetStrategy::Parallel, 4);
    CHECK(naive.value == reduced.value);
    CHECK(parallel.value == reduced.value);
    unsigned long long fact = 1;
    for (int i = 2; i <= dim; ++i) fact *= static_cast<unsigned long long>(i);
    CHECK(naive.terms == reduced.terms * fact);
    ++built;
  }
}

TEST_CASE("parallel workers give identical results") {
  std::mt19937 rng(61);
  for (int t = 0; t < 4; ++t) {
    auto m = random_tensor(rng, 4, 3);
    Rational w1 = det(m, DetStrategy::Parallel, 1);
    Rational w2 = det(m, DetStrategy::Parallel, 2);
    Rational w8 = det(m, DetStrategy::Parallel, 8);
    CHECK(w1 == w2);
    CHECK(w2 == w8);
    CHECK(w1 == det(m, DetStrategy::Reduced));
  }
}

TEST_CASE("odd order vanishes") {
  std::mt19937 rng(67);
  for (int t = 0; t < 5; ++t) {
    auto m = random_tensor(rng, 3, 2);
    CHECK(det(m, DetStrategy::Reduced) == 0);
    CHECK(det(m, DetStrategy::Naive) == 0);  // the full sum really cancels
  }
}

TEST_CASE("slice multilinearity and alternation") {
  std::mt19937 rng(71);
  for (int dim : {2, 3}) {
    auto t = random_tensor(rng, 4, dim);
    Rational base = det(t);

    auto scaled = HyperTensor<Rational>::build(4, dim, [&](const std::vector<int>& i) {
      Rational v = t.at(i);
      return i[0] == 0 ? v * Rational(5) : v;
    });
    CHECK(det(scaled) == base * Rational(5));

    auto swapped = HyperTensor<Rational>::build(4, dim, [&](const std::vector<int>& i) {
      std::vector<int> j = i;
      if (j[0] == 0) j[0] = 1;
      else if (j[0] == 1) j[0] = 0;
      return t.at(j);
    });
    CHECK(det(swapped) == -base);
  }
}

TEST_CASE("row operations preserve order-2 hankel dets") {
  std::mt19937 rng(73);
  std::uniform_int_distribution<long> cd(-3, 3);
  for (int trial = 0; trial < 5; ++trial) {
    auto h = hankel(1, 3, {0, 0, 0}, values_gen(kX3));
    Rational base = det(h);
    long c = cd(rng);
    auto moved = h;
    for (int j = 0; j < 3; ++j) moved.at({0, j}) = moved.at({0, j}) + Rational(c) * h.at({2, j});
    CHECK(det(moved) == base);
  }
}

TEST_CASE("det_shifted agrees with the dense tensor") {
  for (int k = 1; k <= 2; ++k)
    for (int n = 1; n <= 2; ++n) {
      ShiftVector v(static_cast<size_t>(n), 0);
      v[0] = 1;
      auto ws = hankel_shift_vectors(k, n, v);
      CHECK(det_shifted(ws, values_gen(kX12)) == det(hankel(k, n, v, values_gen(kX12))));
    }
  auto wt = toeplitz_shift_vectors(1, 2, {1, 1});
  CHECK(det_shifted(wt, formal_gen()) == det(toeplitz(1, 2, {1, 1}, formal_gen())));
  // odd count of shift vectors: ring zero
  CHECK(det_shifted({{0, 1}, {0, 1}, {0, 1}}, values_gen(kX12)) == 0);
}
