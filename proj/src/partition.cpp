#include "hyperjack/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hyperjack {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  parts_ = std::move(parts);
}

int Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> out(parts_[0], 0);
  for (int j = 0; j < parts_[0]; ++j)
    for (int p : parts_) out[j] += (p > j) ? 1 : 0;
  return Partition(std::move(out));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> out;
  for (int p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Integer z_lambda(const Partition& lam) {
  Integer z = 1;
  for (auto [value, mult] : lam.multiplicities()) {
    Integer v;
    mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(value),
                  static_cast<unsigned long>(mult));
    z *= v * factorial(static_cast<unsigned long>(mult));
  }
  return z;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
  if (mu.weight() != lam.weight())
    throw std::invalid_argument("dominance order needs equal weights");
  int n = std::max(mu.length(), lam.length());
  long sm = 0, sl = 0;
  for (int i = 0; i < n; ++i) {
    sm += mu.part(i);
    sl += lam.part(i);
    if (sm > sl) return false;
  }
  return true;
}

namespace {

void gen_partitions(int remaining, int max_part, int max_length,
                    std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(cur));
    return;
  }
  if (max_length && static_cast<int>(cur.size()) >= max_length) return;
  int top = std::min(remaining, max_part);
  for (int p = top; p >= 1; --p) {
    cur.push_back(p);
    gen_partitions(remaining - p, p, max_length, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int d, int max_length, int max_part) {
  if (d < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  gen_partitions(d, max_part ? std::min(max_part, d) : d, max_length, cur, out);
  return out;
}

Partition almost_rectangle(int n, int p, int l) {
  if (n < 1 || p < 0 || l < 0 || l > n)
    throw std::invalid_argument("almost_rectangle: need n >= 1, p >= 0, 0 <= l <= n");
  std::vector<int> parts(p, n);
  if (l > 0) parts.push_back(l);
  return Partition(std::move(parts));
}

Partition almost_rectangle_conjugate(int n, int p, int l) {
  if (n < 1 || p < 0 || l < 0 || l > n)
    throw std::invalid_argument("almost_rectangle_conjugate: need n >= 1, p >= 0, 0 <= l <= n");
  std::vector<int> parts;
  parts.insert(parts.end(), l, p + 1);
  parts.insert(parts.end(), n - l, p);
  return Partition(std::move(parts));
}

ShiftVector reverse_n(const Partition& lam, int n) {
  if (lam.length() > n)
    throw std::invalid_argument("reverse_n: partition longer than n");
  ShiftVector v(n, 0);
  for (int i = 0; i < lam.length(); ++i) v[n - 1 - i] = lam.parts()[i];
  return v;
}

}  // namespace hyperjack
