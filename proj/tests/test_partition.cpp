#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperjack/partition.hpp"

using namespace hyperjack;

TEST_CASE("construction normalizes and validates") {
  CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
  CHECK(Partition({}).empty());
  CHECK(Partition({2, 1}).weight() == 3);
  CHECK(Partition({5}).length() == 1);
  CHECK(Partition({3, 1}).part(0) == 3);
  CHECK(Partition({3, 1}).part(5) == 0);
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
}

TEST_CASE("conjugate") {
  CHECK(Partition({2, 1}).conjugate() == Partition({2, 1}));
  CHECK(Partition({}).conjugate() == Partition({}));
  CHECK(Partition({3}).conjugate() == Partition({1, 1, 1}));
  CHECK(Partition({4, 2, 1}).conjugate() == Partition({3, 2, 1, 1}));

  std::mt19937 rng(3);
  std::uniform_int_distribution<int> wd(0, 20);
  for (int t = 0; t < 1000; ++t) {
    // random partition: peel random parts off a remaining weight
    std::vector<int> parts;
    int rem = wd(rng), prev = 20;
    while (rem > 0) {
      std::uniform_int_distribution<int> pd(1, std::min(rem, prev));
      int p = pd(rng);
      parts.push_back(p);
      prev = p;
      rem -= p;
    }
    Partition lam(parts);
    CHECK(lam.conjugate().conjugate() == lam);
    CHECK(lam.conjugate().weight() == lam.weight());
  }
}

TEST_CASE("dominance order") {
  CHECK(dominance_leq(Partition({1, 1, 1}), Partition({3})));
  CHECK(dominance_leq(Partition({2, 2}), Partition({3, 1})));
  CHECK_FALSE(dominance_leq(Partition({3, 1}), Partition({2, 2})));
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), std::invalid_argument);

  for (int d = 1; d <= 8; ++d) {
    auto all = partitions_of(d);
    for (const auto& a : all) {
      CHECK(dominance_leq(a, a));
      for (const auto& b : all) {
        if (dominance_leq(a, b) && dominance_leq(b, a)) CHECK(a == b);
        // conjugation reverses dominance
        CHECK(dominance_leq(a, b) == dominance_leq(b.conjugate(), a.conjugate()));
        for (const auto& c : all)
          if (dominance_leq(a, b) && dominance_leq(b, c)) CHECK(dominance_leq(a, c));
      }
    }
  }
}

TEST_CASE("z_lambda") {
  CHECK(z_lambda(Partition({1})) == 1);
  CHECK(z_lambda(Partition({1, 1})) == 2);
  CHECK(z_lambda(Partition({2, 1})) == 2);
  CHECK(z_lambda(Partition({2, 2, 1})) == 8);
  CHECK(z_lambda(Partition({})) == 1);
}

TEST_CASE("reverse_n pads and reverses") {
  CHECK(reverse_n(Partition({2}), 3) == ShiftVector({0, 0, 2}));
  CHECK(reverse_n(Partition({}), 2) == ShiftVector({0, 0}));
  CHECK(reverse_n(Partition({3, 1}), 2) == ShiftVector({1, 3}));
  CHECK_THROWS_AS(reverse_n(Partition({1, 1, 1}), 2), std::invalid_argument);
}

TEST_CASE("almost rectangles") {
  CHECK(almost_rectangle(3, 2, 1) == Partition({3, 3, 1}));
  CHECK(almost_rectangle(3, 0, 0) == Partition({}));
  CHECK(almost_rectangle(2, 1, 2) == Partition({2, 2}));
  CHECK(almost_rectangle_conjugate(3, 0, 0) == Partition({}));
  CHECK(almost_rectangle_conjugate(3, 1, 2) == Partition({2, 2, 1}));
  CHECK(almost_rectangle_conjugate(2, 2, 1) == Partition({3, 2}));
  CHECK_THROWS_AS(almost_rectangle(2, -1, 0), std::invalid_argument);
  CHECK_THROWS_AS(almost_rectangle(2, 0, 3), std::invalid_argument);
  // the two modes are conjugate shapes
  for (int n = 1; n <= 3; ++n)
    for (int p = 0; p <= 2; ++p)
      for (int l = 0; l <= n; ++l)
        CHECK(almost_rectangle(n, p, l).conjugate() == almost_rectangle_conjugate(n, p, l));
}

TEST_CASE("partition enumeration") {
  CHECK(partitions_of(0) == std::vector<Partition>{Partition({})});
  CHECK(partitions_of(3) ==
        std::vector<Partition>{Partition({3}), Partition({2, 1}), Partition({1, 1, 1})});
  CHECK(partitions_of(4, 2) ==
        std::vector<Partition>{Partition({4}), Partition({3, 1}), Partition({2, 2})});
  CHECK(partitions_of(4, 0, 2) ==
        std::vector<Partition>{Partition({2, 2}), Partition({2, 1, 1}), Partition({1, 1, 1, 1})});

  const size_t expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int d = 0; d <= 9; ++d) CHECK(partitions_of(d).size() == expected[d]);
}

TEST_CASE("containment and multiplicities") {
  CHECK(Partition({3, 2}).contains(Partition({2, 2})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({2, 2, 1})));
  CHECK_FALSE(Partition({3, 2}).contains(Partition({4})));
  CHECK(Partition({3, 3, 1}).multiplicities() ==
        std::vector<std::pair<int, int>>{{3, 2}, {1, 1}});
}
