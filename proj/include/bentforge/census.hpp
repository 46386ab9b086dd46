#pragma once

#include <cstdint>
#include <vector>

#include "bentforge/boolean_function.hpp"
#include "bentforge/exec.hpp"

namespace bentforge {

struct BentSet {
  int n = 0;
  // True when `functions` is every bent function on n variables.
  bool exhaustive = false;
  // Deduplicated, ascending truth-table order.
  std::vector<BooleanFunction> functions;
};

// Tests all 2^(2^n) truth tables; only n = 2 and n = 4 are feasible.
BentSet enumerate_bent(int n, Exec exec = Exec::Parallel);

// Maiorana-McFarland sampler: f(x,y) = <x,pi(y)> ^ h(y) on n = 2m variables
// with x the low m coordinates, pi a seeded random permutation of F_2^m and
// h a seeded random function. Returns `count` distinct functions, each
// checked to classify as bent.
BentSet sample_mm_bent(int n, int count, uint64_t seed);

struct CensusReport {
  int n = 0;
  // False when built from a sampled bent set: derivative_images is then only
  // a lower bound on the true image set.
  bool images_complete = false;
  // Reduced (n-1)-variable derivatives of the bent set: every nonzero
  // direction when the set is exhaustive, coordinate directions only when it
  // is sampled. Sorted ascending.
  std::vector<BooleanFunction> derivative_images;
  // All balanced (n-1)-variable functions of degree <= n/2 - 1, sorted.
  std::vector<BooleanFunction> candidates;
  // candidates \ derivative_images, sorted.
  std::vector<BooleanFunction> non_derivatives;
};

CensusReport derivative_census(const BentSet& bents, int max_anf_space_bits = 25,
                               Exec exec = Exec::Parallel);

// Total zeros in the spectra of all n-variable functions of degree <= k
// equals 2^n times the number of balanced ones among them.
bool verify_double_count(int n, int k, int max_anf_space_bits = 25,
                         Exec exec = Exec::Parallel);

// Membership of f in the derivative images of the exhaustive bent census on
// f.n()+1 variables. Only f.n() <= 3 is feasible; odd bent dimensions have
// no bent functions, so even f.n() returns false outright.
bool is_derivative_of_some_bent(const BooleanFunction& f);

// Distinct restrictions of the set's functions to every hyperplane side,
// sorted. For an exhaustive bent set this is the full set of 1-plateaued
// functions obtainable as bent restrictions on n variables.
std::vector<BooleanFunction> bent_restriction_images(const BentSet& bents,
                                                     Exec exec = Exec::Parallel);

}  // namespace bentforge
