#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bentforge/census.hpp"
#include "bentforge/classify.hpp"

namespace bentforge {

// Structured counterexample emitted by the exhaustive verifier suites; the
// suites exist to certify, so a failure must carry enough to reproduce it.
struct Counterexample {
  std::string function_hex;
  std::string detail;
  uint64_t normal = 0;
  int side = -1;
  std::vector<uint64_t> left_support;
  std::vector<uint64_t> right_support;
};

struct VerifyReport {
  std::string suite;
  int n = 0;
  uint64_t cases = 0;
  std::vector<Counterexample> failures;
  bool ok() const { return failures.empty(); }
};

// "prop1": support fraction equals 2^-s for every bent function on n
// variables and for both-side restrictions to every hyperplane.
VerifyReport run_support_fraction_suite(int n, Exec exec = Exec::Parallel);

// "bentpla1": every restriction of every bent function to either side of
// every hyperplane classifies as Plateaued(1).
VerifyReport run_restriction_plateaued_suite(int n, Exec exec = Exec::Parallel);

// "shap1": the derivative-support complement identity, first over all
// coordinate directions, then over every nonzero direction via the pivot
// basis change.
VerifyReport run_derivative_support_suite(int n, Exec exec = Exec::Parallel);

// "thm2": spectrum-zero double counting over all degree-<=k functions for
// every k in [1, n] whose monomial space fits in 2^max_space_bits.
VerifyReport run_double_count_suite(int n, int max_space_bits = 20,
                                    Exec exec = Exec::Parallel);

}  // namespace bentforge
