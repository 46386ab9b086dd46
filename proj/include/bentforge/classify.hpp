#pragma once

#include <cstdint>
#include <optional>

#include "bentforge/spectral.hpp"

namespace bentforge {

enum class FunctionClass { Bent, Plateaued, Neither };

// Exact reduced fraction with small terms (denominators here are at most
// 2^n <= 2^24).
struct Fraction {
  int64_t num = 0;
  int64_t den = 1;
  bool operator==(const Fraction&) const = default;
};
Fraction make_fraction(int64_t num, int64_t den);

struct Classification {
  FunctionClass kind = FunctionClass::Neither;
  // 0 for Bent, the plateau order for Plateaued, -1 for Neither.
  int s = -1;
  // |supp(W_f)| / 2^n, exact.
  Fraction support_fraction;
  // Common nonzero |W| value; absent for Neither.
  std::optional<int64_t> amplitude;

  bool is_bent() const { return kind == FunctionClass::Bent; }
  bool is_plateaued(int order) const {
    return kind == FunctionClass::Plateaued && s == order;
  }
  bool operator==(const Classification&) const = default;
};

// Bent iff every |W| = 2^(n/2); Plateaued(s), s >= 1, iff values lie in
// {0, +-2^((n+s)/2)}; Neither otherwise. Bent is never reported as
// Plateaued(0); the affine case s = n is reported as Plateaued(n).
Classification classify(const BooleanFunction& f);
Classification classify(const Spectrum& s);

// True iff the support fraction equals 2^-s exactly (s = 0 for Bent).
// Throws NotPlateaued when the function classifies as Neither.
bool support_fraction_check(const BooleanFunction& f);

// f must be bent. True iff its restriction to the hyperplane classifies as
// Plateaued(1).
bool verify_restriction_plateaued(const BooleanFunction& f,
                                  const HyperplaneSpec& h);

// f must be bent, i in [1, n]. Checks that the support of the reduced
// derivative in direction e_i equals the complement of the support of the
// Walsh-Hadamard transform of the dual's restriction to {x : x_i = 0}.
bool verify_derivative_support(const BooleanFunction& f, int i);

// Same check for an arbitrary nonzero direction a, with the dual restricted
// to {x : <x,a> = 0} and the derivative reduced over the lowest-set-bit
// pivot transversal.
bool verify_derivative_support_dir(const BooleanFunction& f, uint64_t a);

}  // namespace bentforge
