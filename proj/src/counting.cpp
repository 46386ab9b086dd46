#include "bentforge/counting.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "bentforge/anf_enum.hpp"
#include "bentforge/error.hpp"

namespace bentforge {

BigInt WeightDistribution::at(uint64_t t) const {
  const auto it = counts.find(t);
  return it == counts.end() ? BigInt(0) : it->second;
}

BigInt WeightDistribution::total() const {
  BigInt sum = 0;
  for (const auto& [t, c] : counts) sum += c;
  return sum;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;
  }
  return r;
}

BigInt monomial_count(int n, int k) {
  BigInt sum = 0;
  for (int m = 0; m <= k; ++m) sum += binomial(n, m);
  return sum;
}

BigInt total_count(int n, int k) {
  const BigInt exponent = monomial_count(n, k);
  return BigInt(1) << static_cast<size_t>(exponent);
}

WeightDistribution exact_distribution(int n, int k, int max_space_bits, Exec exec) {
  if (n < 0 || k < 0) fail(ErrorCode::BadInput, "distribution needs n, k >= 0");
  const BigInt space = monomial_count(n, k);
  if (space > max_space_bits)
    fail(ErrorCode::SpaceTooLarge,
         "ANF space needs 2^" + space.str() + " enumerations, cap is 2^" +
             std::to_string(max_space_bits));

  const MonomialBasis basis = make_monomial_basis(n, k);
  const uint64_t size = uint64_t{1} << n;
  const int chunks = exec == Exec::Parallel ? worker_count() : 1;

  // Tallies fit in 64 bits: at most 2^max_space_bits functions in total.
  std::vector<std::vector<uint64_t>> tallies(chunks,
                                             std::vector<uint64_t>(size + 1, 0));
  for_each_anf_table(basis, exec, chunks, [&](int c, const uint64_t* table) {
    uint64_t w = 0;
    for (size_t i = 0; i < basis.table_words; ++i) w += std::popcount(table[i]);
    ++tallies[c][w];
  });

  WeightDistribution dist;
  dist.n = n;
  dist.k = k;
  dist.provenance = Provenance::Exact;
  for (uint64_t t = 0; t <= size; ++t) {
    uint64_t c = 0;
    for (int j = 0; j < chunks; ++j) c += tallies[j][t];
    if (c) dist.counts[t] = c;
  }
  return dist;
}

WeightDistribution convolution_bound(const WeightDistribution& base) {
  WeightDistribution out;
  out.n = base.n + 1;
  out.k = base.k + 1;
  out.provenance = Provenance::ConvolutionLowerBound;
  for (const auto& [t1, c1] : base.counts) {
    for (const auto& [t2, c2] : base.counts) {
      out.counts[t1 + t2] += c1 * c2;
    }
  }
  return out;
}

BigInt cauchy_schwarz_bound(const WeightDistribution& dist) {
  if (dist.n == 0) {
    // Degenerate target n = 1: the half range collapses to t = 0 and the
    // denominator (2^(n-2)+1)^2 is the rational 9/4.
    const BigInt s = dist.at(0);
    return 8 * s * s / 9;
  }
  const uint64_t half = uint64_t{1} << (dist.n - 1);
  BigInt s = 0;
  for (const auto& [t, c] : dist.counts)
    if (t <= half) s += c;
  const BigInt den = (BigInt(half) + 1) * (BigInt(half) + 1);
  return 2 * s * s / den;
}

BoundReport bound_report(int n) {
  if (n % 2 != 0) fail(ErrorCode::OddN, "bound report is defined for even n only");
  if (n < 4) fail(ErrorCode::BadInput, "bound report needs n >= 4");

  BoundReport r;
  r.n = n;
  r.log2_balanced_lower = BigRational((BigInt(1) << (n - 1)) - 1 - (2 * n - 2));
  r.log2_plateaued_upper = BigRational(BigInt(347) << (n - 4), BigInt(100));
  r.refuted_nominally = r.log2_balanced_lower > r.log2_plateaued_upper;
  r.caveat =
      "nominal comparison of the closed-form exponents only; the o(1) factors "
      "in the asymptotic bounds are not modeled";
  return r;
}

}  // namespace bentforge
