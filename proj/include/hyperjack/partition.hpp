#pragma once

#include <compare>
#include <map>
#include <vector>

#include "hyperjack/rational.hpp"

namespace hyperjack {

// Integer partition: weakly decreasing positive parts. Trailing zeros in the
// input are tolerated and stripped; zeros elsewhere or negative entries are
// rejected (arbitrary integer vectors are ShiftVector territory).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const;
  int part(int i) const {  // 0-based, 0 beyond the length
    return i < length() ? parts_[i] : 0;
  }
  bool empty() const { return parts_.empty(); }

  Partition conjugate() const;
  // cellwise containment: mu_i <= lambda_i for all i
  bool contains(const Partition& mu) const;
  // multiplicity of each part value, largest value first
  std::vector<std::pair<int, int>> multiplicities() const;

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const;  // "(3,1,1)", "()" for empty

 private:
  std::vector<int> parts_;
};

// Arbitrary integer vector used to shift tensor entry indices. No sorting,
// no sign constraints.
using ShiftVector = std::vector<int>;

// z_lambda = prod_r r^{m_r} m_r!  (order of the centralizer of a permutation
// of cycle type lambda)
Integer z_lambda(const Partition& lam);

// Dominance order: mu <= lambda iff all prefix sums satisfy
// mu_1+...+mu_i <= lambda_1+...+lambda_i. Only defined for equal weights.
bool dominance_leq(const Partition& mu, const Partition& lam);

// All partitions of d, reverse lexicographic, largest first: the first entry
// is (d), the last is (1^d). Optional caps on length and largest part
// (0 = unconstrained).
std::vector<Partition> partitions_of(int d, int max_length = 0, int max_part = 0);

// The almost-rectangular shapes n^p l (n repeated p times, then l) and its
// conjugate (p+1)^l p^{n-l}; both require 0 <= l <= n, p >= 0.
Partition almost_rectangle(int n, int p, int l);
Partition almost_rectangle_conjugate(int n, int p, int l);

// lambda zero-padded to n entries and written backwards; needs l(lambda) <= n
ShiftVector reverse_n(const Partition& lam, int n);

}  // namespace hyperjack
