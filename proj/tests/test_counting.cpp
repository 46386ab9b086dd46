#include "doctest.h"

#include <random>

#include "bentforge/counting.hpp"
#include "oracles.hpp"

using namespace bentforge;

TEST_CASE("binomials and totals") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(8, 4) == 70);
  CHECK(monomial_count(3, 2) == 7);
  CHECK(total_count(3, 2) == 128);
  CHECK(total_count(5, 0) == 2);
  CHECK(total_count(4, 2) == 2048);
}

TEST_CASE("exact distributions") {
  const WeightDistribution affine2 = exact_distribution(2, 1);
  CHECK(affine2.provenance == Provenance::Exact);
  CHECK(affine2.at(0) == 1);
  CHECK(affine2.at(2) == 6);
  CHECK(affine2.at(4) == 1);
  CHECK(affine2.at(1) == 0);
  CHECK(affine2.total() == 8);

  const WeightDistribution d32 = exact_distribution(3, 2);
  CHECK(d32.at(4) == 70);
  CHECK(d32.total() == 128);

  for (int n = 1; n <= 6; ++n) {
    const WeightDistribution consts = exact_distribution(n, 0);
    CHECK(consts.counts.size() == 2);
    CHECK(consts.at(0) == 1);
    CHECK(consts.at(uint64_t{1} << n) == 1);
  }

  CHECK_THROWS_AS(exact_distribution(8, 4), Error);
  try {
    exact_distribution(8, 4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SpaceTooLarge);
  }

  SUBCASE("totals and symmetry for every feasible pair") {
    for (int n = 0; n <= 6; ++n) {
      for (int k = 0; k <= n; ++k) {
        if (monomial_count(n, k) > 18) continue;
        const WeightDistribution d = exact_distribution(n, k);
        CHECK(d.total() == total_count(n, k));
        const uint64_t size = uint64_t{1} << n;
        for (const auto& [t, c] : d.counts) CHECK(c == d.at(size - t));
      }
    }
  }

  SUBCASE("serial and parallel enumerations agree") {
    const WeightDistribution p = exact_distribution(5, 2, 25, Exec::Parallel);
    const WeightDistribution s = exact_distribution(5, 2, 25, Exec::Serial);
    CHECK(p.counts == s.counts);
  }
}

TEST_CASE("convolution recurrence is a lower bound") {
  WeightDistribution base00 = exact_distribution(0, 0);
  CHECK(base00.at(0) == 1);
  CHECK(base00.at(1) == 1);
  const WeightDistribution d11 = convolution_bound(base00);
  CHECK(d11.n == 1);
  CHECK(d11.k == 1);
  CHECK(d11.provenance == Provenance::ConvolutionLowerBound);
  CHECK(d11.at(0) == 1);
  CHECK(d11.at(1) == 2);
  CHECK(d11.at(2) == 1);
  CHECK(d11.counts == exact_distribution(1, 1).counts);  // tight here

  // The documented strict witness: 38 < 70 at (n=3, k=2, t=4).
  const WeightDistribution conv32 = convolution_bound(exact_distribution(2, 1));
  CHECK(conv32.at(4) == 38);
  CHECK(exact_distribution(3, 2).at(4) == 70);

  WeightDistribution point;
  point.n = 3;
  point.k = 1;
  point.counts[0] = 1;
  const WeightDistribution conv_point = convolution_bound(point);
  CHECK(conv_point.counts.size() == 1);
  CHECK(conv_point.at(0) == 1);

  SUBCASE("pointwise dominance wherever both sides are computable") {
    for (int n = 1; n <= 5; ++n) {
      for (int k = 1; k <= n; ++k) {
        if (monomial_count(n, k) > 18 || monomial_count(n - 1, k - 1) > 18) continue;
        const WeightDistribution exact = exact_distribution(n, k);
        const WeightDistribution bound =
            convolution_bound(exact_distribution(n - 1, k - 1));
        for (const auto& [t, c] : bound.counts) CHECK(c <= exact.at(t));
      }
    }
  }
}

TEST_CASE("cauchy-schwarz step") {
  // dist (2,1): half-range sum 1 + 6 = 7, floor(2*49 / 9) = 10 <= 38.
  const WeightDistribution base = exact_distribution(2, 1);
  const BigInt cs = cauchy_schwarz_bound(base);
  CHECK(cs == 10);
  CHECK(cs <= convolution_bound(base).at(4));

  WeightDistribution point;
  point.n = 2;
  point.k = 0;
  point.counts[0] = 1;
  CHECK(cauchy_schwarz_bound(point) == BigInt(2) / ((BigInt(2) + 1) * (BigInt(2) + 1)));

  // Degenerate base (0,0): the bound collapses to 0 and stays below the
  // exact |A^1_1(1)| = 2.
  CHECK(cauchy_schwarz_bound(exact_distribution(0, 0)) == 0);
  CHECK(exact_distribution(1, 1).at(1) == 2);

  SUBCASE("chain consistency") {
    for (int n = 2; n <= 5; ++n) {
      const int k = n / 2;
      if (k < 1 || monomial_count(n - 1, k - 1) > 18 || monomial_count(n, k) > 18)
        continue;
      const WeightDistribution d = exact_distribution(n - 1, k - 1);
      const BigInt cs_bound = cauchy_schwarz_bound(d);
      const BigInt conv = convolution_bound(d).at(uint64_t{1} << (n - 1));
      const BigInt exact = exact_distribution(n, k).at(uint64_t{1} << (n - 1));
      CHECK(cs_bound <= conv);
      CHECK(conv <= exact);
    }
  }
}

TEST_CASE("bound report") {
  const BoundReport r4 = bound_report(4);
  CHECK(r4.log2_balanced_lower == 1);
  CHECK(r4.log2_plateaued_upper == BigRational(347, 100));
  CHECK_FALSE(r4.refuted_nominally);

  const BoundReport r6 = bound_report(6);
  CHECK(r6.log2_balanced_lower == 21);
  CHECK(r6.log2_plateaued_upper == BigRational(347 * 4, 100));
  CHECK(r6.refuted_nominally);

  const BoundReport r10 = bound_report(10);
  CHECK(r10.log2_balanced_lower == 493);
  CHECK(r10.log2_plateaued_upper == BigRational(347 * 64, 100));
  CHECK(r10.refuted_nominally);

  CHECK_THROWS_AS(bound_report(5), Error);
  try {
    bound_report(5);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OddN);
  }
  CHECK_THROWS_AS(bound_report(2), Error);

  SUBCASE("the closed-form lower bound stays below the exact count at n = 4") {
    // 2^lower <= |A^2_4(8)| exactly.
    const BigInt exact = exact_distribution(4, 2).at(8);
    const BigInt lower_pow = BigInt(1) << 1;
    CHECK(lower_pow <= exact);
  }
}
