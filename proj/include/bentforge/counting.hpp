#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "bentforge/exec.hpp"

namespace bentforge {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

enum class Provenance { Exact, ConvolutionLowerBound };

// counts[t] = number of n-variable functions of degree <= k and weight t
// (exact), or the convolution lower bound for that number. Missing keys are
// zero; t ranges over [0, 2^n].
struct WeightDistribution {
  int n = 0;
  int k = 0;
  Provenance provenance = Provenance::Exact;
  std::map<uint64_t, BigInt> counts;

  BigInt at(uint64_t t) const;
  BigInt total() const;
};

BigInt binomial(int n, int k);
// sum_{m<=k} C(n,m): the number of monomials of degree <= k.
BigInt monomial_count(int n, int k);
// 2^monomial_count(n,k): the number of functions of degree <= k.
BigInt total_count(int n, int k);

// Enumerates every ANF over the degree-<=k monomials and tallies weights.
// Rejects monomial spaces larger than 2^max_space_bits.
WeightDistribution exact_distribution(int n, int k, int max_space_bits = 25,
                                      Exec exec = Exec::Parallel);

// Distribution for (n+1, k+1) built from the base distribution for (n, k) by
// counts[t] = sum_{t1+t2=t} base[t1]*base[t2]. This is a lower bound on the
// exact distribution, not an equality: the decomposition
// h = g ^ x_{n+1}(f^g) only constrains deg(f^g) <= k, so pairs with
// deg f, deg g > k are missed (already at n=3, k=2, t=4 the bound is 38
// against the exact 70).
WeightDistribution convolution_bound(const WeightDistribution& base);

// floor(2 * (sum_{t<=2^(n-2)} dist[t])^2 / (2^(n-2)+1)^2) for the target
// n = dist.n + 1, in exact arithmetic; never exceeds
// convolution_bound(dist)[2^(n-1)].
BigInt cauchy_schwarz_bound(const WeightDistribution& dist);

struct BoundReport {
  int n = 0;
  // 2^(n-1) - 1 - (2n-2): log2 of the closed-form lower bound on the number
  // of balanced (n-1)-variable functions of degree <= n/2 - 1.
  BigRational log2_balanced_lower;
  // 3.47 * 2^(n-4), carried as the exact rational 347/100 * 2^(n-4): log2 of
  // the upper bound on the number of 1-plateaued functions arising as bent
  // restrictions.
  BigRational log2_plateaued_upper;
  bool refuted_nominally = false;
  std::string caveat;
};

// n must be even and >= 4.
BoundReport bound_report(int n);

}  // namespace bentforge
