#pragma once

#include <map>

#include "hyperjack/symfunc.hpp"

namespace hyperjack {

// Which linear extension of dominance the Gram-Schmidt loop walks. The
// result is independent of the choice (orthogonalization only ever runs
// against strictly dominated partitions); keeping two around lets the tests
// assert exactly that.
enum class GSOrder { ReverseLex, LengthGraded };

// P normalization: monic on m_lambda, orthogonal for <,>_alpha.
SymFunc jack_P(const Partition& lam, const Rational& alpha,
               GSOrder order = GSOrder::ReverseLex);

// <P_lambda, P_lambda>_alpha straight out of the Gram-Schmidt data
Rational jack_P_norm(const Partition& lam, const Rational& alpha);

// hook product b_lambda = prod (alpha*arm + leg + 1) / (alpha*(arm+1) + leg);
// equals 1 / <P,P>_alpha
Rational b_lambda(const Partition& lam, const Rational& alpha);

// the numerator / denominator hook products separately: c and c'
std::pair<Rational, Rational> c_cprime(const Partition& lam, const Rational& alpha);

SymFunc jack_Q(const Partition& lam, const Rational& alpha);  // b * P
SymFunc jack_J(const Partition& lam, const Rational& alpha);  // c * P == c' * Q

// expansion of a homogeneous f in the P basis at this alpha (unitriangular
// solve against the m expansion); throws if f is not homogeneous
std::map<Partition, Rational> expand_in_P(const SymFunc& f, const Rational& alpha);

// skew functions via structure constants <Q_lambda, P_nu P_mu>; zero when
// mu is not contained in lambda
SymFunc skew_Q(const Partition& lam, const Partition& mu, const Rational& alpha);
SymFunc skew_P(const Partition& lam, const Partition& mu, const Rational& alpha);

// Q_lambda(X+Y) == sum_mu Q_mu(X) Q_{lambda/mu}(Y), both sides evaluated
std::pair<Rational, Rational> branching_sides(const Partition& lam, const Rational& alpha,
                                              const std::vector<Rational>& xs,
                                              const std::vector<Rational>& ys);
bool branching_check(const Partition& lam, const Rational& alpha,
                     const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// <P_{lam'}^{(alpha)}, Q_{lam'}^{(alpha)}>'_{n,1/alpha} in closed form:
// the cell product over lam' times multinomial(kn; k,...,k)/n! with k = 1/alpha.
// Requires 1/alpha to be a positive integer.
Rational scalar_prime_rect(const Partition& lam_conj, int n, const Rational& alpha);

// R normalization: scalar_prime_rect(conjugate(lam), n, 1/alpha) * Q_lambda.
// Requires alpha to be a positive integer; vanishes exactly when lam_1 > n
// (the closed-form cell product hits a zero numerator).
SymFunc jack_R(const Partition& lam, const Rational& alpha, int n);

// kappa(n,p,l;k) = prod_{i<=n, j<=p} (j + k(i-1))/(j - 1 + ki)
//                * prod_{i<=l} (p + 1 + k(n-i))/(p + k(n-i+1))
Rational kappa(int n, int p, int l, int k);

// b of the rectangle n^{k(n-1)} at alpha = k, in closed form
Rational b_rect_closed(int n, int k);

}  // namespace hyperjack
