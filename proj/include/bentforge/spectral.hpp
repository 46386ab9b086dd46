#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentforge/boolean_function.hpp"
#include "bentforge/exec.hpp"

namespace bentforge {

// Walsh-Hadamard coefficients of a Boolean function: coeffs[y] = W_f(y).
struct Spectrum {
  int n = 0;
  std::vector<int64_t> coeffs;
};

// Integer-valued function on F_2^n. All identities in this layer are exact
// over the integers; there is no floating point.
struct RealFunction {
  int n = 0;
  std::vector<int64_t> values;
};

// Algebraic normal form: coeffs bit y is the coefficient of the monomial
// prod_{i : y_i = 1} x_i. Constant functions have degree 0.
struct Anf {
  int n = 0;
  BooleanFunction coeffs;
  int degree = 0;
};

// In-place transform v[y] <- sum_x v[x] * (-1)^<x,y>. Size must be a power
// of two. The Serial path is the textbook nested-loop butterfly kept as the
// reference; the Parallel path runs each stage as a flat OpenMP loop.
void fourier_inplace(std::span<int64_t> v, Exec exec = Exec::Parallel);
void fourier_inplace_serial(std::span<int64_t> v);

Spectrum wht(const BooleanFunction& f, Exec exec = Exec::Parallel);
RealFunction fourier(const RealFunction& h, Exec exec = Exec::Parallel);

// Reconstructs f from its spectrum; rejects inputs that are not the spectrum
// of any Boolean function.
BooleanFunction inverse_wht(const Spectrum& s);

Anf mobius(const BooleanFunction& f);
BooleanFunction mobius_inverse(const Anf& a);
int degree(const BooleanFunction& f);

// h * g (z) = sum_x h(x) g(z ^ x), computed through the transform domain
// with exact division.
RealFunction convolve(const RealFunction& h, const RealFunction& g);

// x -> h(x) + h(x ^ a), computed directly; also recomputed through the
// transform-domain identity with Gamma = {y : <y,a> = 0} and checked for
// exact equality.
RealFunction coset_sum(const RealFunction& h, uint64_t a);

// Dual of a bent function: g with (-1)^g = W_f / 2^(n/2).
BooleanFunction dual_bent(const BooleanFunction& f);

// sum_y H^(y)^2 == 2^n sum_x H(x)^2, exact.
bool parseval_check(const RealFunction& h);
// sum_y W(y)^2 == 2^(2n), valid for spectra of Boolean functions.
bool parseval_check(const Spectrum& s);

RealFunction to_pm_one(const BooleanFunction& f);  // (-1)^f
// Indicator of {y : <y,normal> = 0}. normal = 0 gives the whole space.
RealFunction subspace_indicator(int n, uint64_t normal);
// Indicator of {0, a} (the dual of the hyperplane with that normal).
RealFunction pair_indicator(int n, uint64_t a);
RealFunction delta_at(int n, uint64_t x);

uint64_t spectrum_zeros(const Spectrum& s);

}  // namespace bentforge
