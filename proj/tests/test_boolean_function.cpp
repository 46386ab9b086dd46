#include "doctest.h"

#include <random>
#include <vector>

#include "bentforge/boolean_function.hpp"
#include "oracles.hpp"

using namespace bentforge;
using oracles::make_function;
using oracles::random_function;

namespace {

BooleanFunction from_bits(std::vector<uint8_t> bits, int n) {
  return BooleanFunction::from_truth_table(bits, n);
}

BooleanFunction quad44() {  // x1*x2 ^ x3*x4
  return make_function(4, [](uint64_t x) {
    return ((x & 1) && (x & 2)) ^ ((x & 4) && (x & 8));
  });
}

}  // namespace

TEST_CASE("from_truth_table and indexing") {
  const BooleanFunction f = from_bits({0, 0, 0, 1}, 2);  // x1*x2
  CHECK(f.get(0) == false);
  CHECK(f.get(1) == false);
  CHECK(f.get(2) == false);
  CHECK(f.get(3) == true);
  CHECK(f == make_function(2, [](uint64_t x) { return (x & 1) && (x & 2); }));

  const BooleanFunction point = from_bits({0}, 0);
  CHECK(point.n() == 0);
  CHECK(point.domain_size() == 1);
  CHECK(point.weight() == 0);

  const BooleanFunction x = from_bits({0, 1, 1, 0}, 2);  // x1 ^ x2
  CHECK(x == make_function(2, [](uint64_t v) { return ((v ^ (v >> 1)) & 1) != 0; }));

  CHECK_THROWS_WITH_AS(from_bits({0, 0, 0}, 2), doctest::Contains("expected 4"), Error);
  try {
    from_bits({0, 0, 0}, 2);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::LengthMismatch);
  }
}

TEST_CASE("variable cap is a runtime setting") {
  CHECK(BooleanFunction::max_variables() == 24);
  BooleanFunction::set_max_variables(3);
  CHECK_THROWS_AS(BooleanFunction::zero(4), Error);
  try {
    BooleanFunction::zero(4);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NTooLarge);
  }
  BooleanFunction::set_max_variables(24);
  CHECK_NOTHROW(BooleanFunction::zero(4));
}

TEST_CASE("weight") {
  CHECK(make_function(3, [](uint64_t) { return true; }).weight() == 8);
  CHECK(from_bits({0, 0, 0, 1}, 2).weight() == 1);
  // Derived by direct evaluation over all 16 inputs.
  uint64_t direct = 0;
  for (uint64_t x = 0; x < 16; ++x)
    direct += static_cast<uint64_t>((((x & 1) && (x & 2)) ^ ((x & 4) && (x & 8))) ? 1 : 0);
  CHECK(direct == 6);
  CHECK(quad44().weight() == 6);
}

TEST_CASE("complement splits the cube") {
  std::mt19937_64 rng(11);
  for (int n = 0; n <= 8; ++n) {
    const BooleanFunction f = random_function(n, rng);
    CHECK(f.weight() + f.complement().weight() == f.domain_size());
  }
}

TEST_CASE("is_balanced") {
  CHECK(from_bits({0, 1, 1, 0}, 2).is_balanced());
  CHECK_FALSE(BooleanFunction::zero(3).is_balanced());
  CHECK_FALSE(from_bits({0, 0, 0, 1}, 2).is_balanced());  // weight 1 != 2
  CHECK_FALSE(from_bits({1}, 0).is_balanced());
}

TEST_CASE("derivative") {
  const BooleanFunction f = quad44();
  CHECK(derivative(f, 0) == BooleanFunction::zero(4));

  // D_{e1}(x1*x2) = x2
  const BooleanFunction andf = from_bits({0, 0, 0, 1}, 2);
  CHECK(derivative(andf, 1) == make_function(2, [](uint64_t x) { return x & 2; }));

  // Derived by evaluating f(x) ^ f(x^e1) on all 16 inputs: equals x2 read as
  // a 4-variable function.
  CHECK(derivative(f, 1) == make_function(4, [](uint64_t x) { return x & 2; }));

  SUBCASE("derivative is constant on {x, x^a}") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 8);
      const BooleanFunction g = random_function(n, rng);
      const uint64_t a = rng() % g.domain_size();
      const BooleanFunction d = derivative(g, a);
      for (uint64_t x = 0; x < g.domain_size(); ++x) CHECK(d.get(x) == d.get(x ^ a));
    }
  }
}

TEST_CASE("reduce_derivative") {
  const BooleanFunction andf = from_bits({0, 0, 0, 1}, 2);
  CHECK(reduce_derivative(andf, 1) == from_bits({0, 1}, 1));

  // Old x2 becomes the first variable after coordinate 1 is deleted.
  CHECK(reduce_derivative(quad44(), 1) ==
        make_function(3, [](uint64_t x) { return x & 1; }));

  CHECK(reduce_derivative(BooleanFunction::zero(3), 1) == BooleanFunction::zero(2));

  CHECK_THROWS_AS(reduce_derivative(andf, 0), Error);
  CHECK_THROWS_AS(reduce_derivative(andf, 3), Error);
  try {
    reduce_derivative(andf, 3);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
  }

  SUBCASE("lifting the reduction along coordinate i reproduces the derivative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const BooleanFunction f = random_function(n, rng);
      const int i = 1 + static_cast<int>(rng() % n);
      const BooleanFunction red = reduce_derivative(f, i);
      const BooleanFunction full = derivative(f, uint64_t{1} << (i - 1));
      const uint64_t low = (uint64_t{1} << (i - 1)) - 1;
      for (uint64_t x = 0; x < f.domain_size(); ++x) {
        const uint64_t xp = (x & low) | ((x >> i) << (i - 1));
        CHECK(full.get(x) == red.get(xp));
      }
    }
  }

  SUBCASE("reduce_derivative_dir agrees with the coordinate form on e_i") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const BooleanFunction f = random_function(n, rng);
      const int i = 1 + static_cast<int>(rng() % n);
      CHECK(reduce_derivative_dir(f, uint64_t{1} << (i - 1)) == reduce_derivative(f, i));
    }
  }
}

TEST_CASE("restrict") {
  // Derived by direct evaluation on the 8 points with x1 = 0.
  CHECK(restrict(quad44(), HyperplaneSpec(1, 0)) ==
        make_function(3, [](uint64_t x) { return (x & 2) && (x & 4); }));

  const BooleanFunction one = make_function(3, [](uint64_t) { return true; });
  CHECK(restrict(one, HyperplaneSpec(5, 1)) ==
        make_function(2, [](uint64_t) { return true; }));

  const BooleanFunction x1 = make_function(2, [](uint64_t x) { return x & 1; });
  CHECK(restrict(x1, HyperplaneSpec(1, 1)) == make_function(1, [](uint64_t) { return true; }));

  CHECK_THROWS_AS(HyperplaneSpec(0, 0), Error);

  SUBCASE("the two sides partition the truth table") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 7);
      const BooleanFunction f = random_function(n, rng);
      const uint64_t a = 1 + rng() % (f.domain_size() - 1);
      CHECK(f.weight() == restrict(f, HyperplaneSpec(a, 0)).weight() +
                              restrict(f, HyperplaneSpec(a, 1)).weight());
    }
  }

  SUBCASE("restriction picks the points satisfying the constraint") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = 2 + static_cast<int>(rng() % 5);
      const BooleanFunction f = random_function(n, rng);
      const uint64_t a = 1 + rng() % (f.domain_size() - 1);
      for (int side = 0; side < 2; ++side) {
        const BooleanFunction r = restrict(f, HyperplaneSpec(a, side));
        // Walk the hyperplane in the embed order and compare values.
        uint64_t count = 0;
        for (uint64_t x = 0; x < f.domain_size(); ++x)
          if (parity64(x & a) == side) ++count;
        CHECK(count == r.domain_size());
        CHECK(r.weight() <= f.weight());
      }
    }
  }
}

TEST_CASE("apply_affine") {
  const BooleanFunction f = quad44();
  CHECK(apply_affine(f, AffineMap::identity(4)) == f);

  // Swap x1 and x2.
  AffineMap swap12(2, {2, 1}, 0, 0, 0);
  const BooleanFunction x1 = make_function(2, [](uint64_t x) { return x & 1; });
  const BooleanFunction x2 = make_function(2, [](uint64_t x) { return x & 2; });
  CHECK(apply_affine(x1, swap12) == x2);

  CHECK_THROWS_AS(AffineMap(2, {3, 3}, 0, 0, 0), Error);
  try {
    AffineMap(2, {3, 3}, 0, 0, 0);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SingularMatrix);
  }

  SUBCASE("invertible substitution with no added affine part preserves weight") {
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 30; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const BooleanFunction g = random_function(n, rng);
      AffineMap m = oracles::random_affine_map(n, rng);
      AffineMap no_linear(n, m.rows(), m.shift(), 0, 0);
      CHECK(apply_affine(g, no_linear).weight() == g.weight());
    }
  }
}

TEST_CASE("canonical ordering is the truth-table integer order") {
  const BooleanFunction a = from_bits({1, 0, 0, 0}, 2);  // table integer 1
  const BooleanFunction b = from_bits({0, 0, 0, 1}, 2);  // table integer 8
  CHECK(a < b);
  CHECK(BooleanFunction::zero(2) < a);
}
