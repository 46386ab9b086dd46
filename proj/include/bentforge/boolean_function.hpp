#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "bentforge/error.hpp"

namespace bentforge {

// Boolean function on F_2^n as a bit-packed truth table.
//
// Bit ordering, used everywhere in this library: the table bit at index x is
// f(x), and variable x_{i+1} is bit i (least significant first) of the index.
// So for n=2 the table bits are f(00), f(10), f(01), f(11) in that order,
// reading x as (x1, x2).
class BooleanFunction {
 public:
  BooleanFunction() : n_(0), words_(1, 0) {}

  static BooleanFunction zero(int n);
  // bits[x] != 0 means f(x) = 1; bits.size() must be exactly 2^n.
  static BooleanFunction from_truth_table(std::span<const uint8_t> bits, int n);
  static BooleanFunction from_words(int n, std::vector<uint64_t> words);

  int n() const { return n_; }
  uint64_t domain_size() const { return uint64_t{1} << n_; }

  bool get(uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1u; }
  void set(uint64_t x, bool v);

  uint64_t weight() const;
  bool is_balanced() const;
  BooleanFunction complement() const;  // f xor 1

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==(const BooleanFunction&) const = default;
  // Orders by n, then by the truth table read as a 2^n-bit integer.
  std::strong_ordering operator<=>(const BooleanFunction& o) const;

  // Runtime cap on n (tables are 2^n bits). Default 24.
  static int max_variables();
  static void set_max_variables(int cap);

 private:
  int n_;
  std::vector<uint64_t> words_;
};

// Affine hyperplane {x : <x,normal> = side}; normal must be nonzero.
class HyperplaneSpec {
 public:
  HyperplaneSpec(uint64_t normal, int side);
  uint64_t normal() const { return normal_; }
  int side() const { return side_; }

 private:
  uint64_t normal_;
  int side_;
};

// x -> f(Ax ^ shift) ^ <x,linear> ^ constant, with A an invertible n x n bit
// matrix given by rows (y_i = <rows[i], x>). The constructor rejects singular
// matrices.
class AffineMap {
 public:
  AffineMap(int n, std::vector<uint64_t> rows, uint64_t shift, uint64_t linear,
            int constant);
  static AffineMap identity(int n);

  int n() const { return n_; }
  uint64_t apply_matrix(uint64_t x) const;
  const std::vector<uint64_t>& rows() const { return rows_; }
  uint64_t shift() const { return shift_; }
  uint64_t linear() const { return linear_; }
  int constant() const { return constant_; }

 private:
  int n_;
  std::vector<uint64_t> rows_;
  uint64_t shift_;
  uint64_t linear_;
  int constant_;
};

uint64_t weight(const BooleanFunction& f);
bool is_balanced(const BooleanFunction& f);

// g(x) = f(x) ^ f(x ^ a); satisfies g(x) = g(x ^ a).
BooleanFunction derivative(const BooleanFunction& f, uint64_t a);

// Derivative in coordinate direction e_i (i in [1, n]), restricted to
// {x : x_i = 0} and read as an (n-1)-variable function with coordinate i
// deleted.
BooleanFunction reduce_derivative(const BooleanFunction& f, int i);

// Same reduction for an arbitrary nonzero direction a: the transversal is
// {x : x_p = 0} with p the lowest set bit of a, and coordinate p is deleted.
// Coincides with reduce_derivative(f, i) when a = e_i.
BooleanFunction reduce_derivative_dir(const BooleanFunction& f, uint64_t a);

// Restriction of f to the hyperplane as an (n-1)-variable function. The
// constraint <x,normal> = side is solved for the pivot coordinate x_p with p
// the lowest set bit of the normal, and coordinate p is deleted; for
// normal = e_i this is plain deletion of coordinate i.
BooleanFunction restrict(const BooleanFunction& f, const HyperplaneSpec& h);

BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& m);

// F_2 linear algebra on rows-as-bitmask matrices.
bool is_invertible(const std::vector<uint64_t>& rows, int n);

inline int parity64(uint64_t x) { return __builtin_parityll(x); }

}  // namespace bentforge
