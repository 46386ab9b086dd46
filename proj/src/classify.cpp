#include "bentforge/classify.hpp"

#include <bit>
#include <numeric>

namespace bentforge {

Fraction make_fraction(int64_t num, int64_t den) {
  const int64_t g = std::gcd(num, den);
  return Fraction{g ? num / g : 0, g ? den / g : 1};
}

Classification classify(const Spectrum& s) {
  const uint64_t size = uint64_t{1} << s.n;
  if (s.coeffs.size() != size)
    fail(ErrorCode::LengthMismatch, "spectrum is not 2^n long");

  uint64_t zeros = 0;
  int64_t amp = 0;
  bool uniform = true;
  for (int64_t v : s.coeffs) {
    if (v == 0) {
      ++zeros;
      continue;
    }
    const int64_t m = v < 0 ? -v : v;
    if (amp == 0)
      amp = m;
    else if (m != amp)
      uniform = false;
  }

  Classification c;
  c.support_fraction = make_fraction(static_cast<int64_t>(size - zeros),
                                     static_cast<int64_t>(size));
  if (!uniform || amp == 0) return c;  // Neither (all-zero cannot arise from (-1)^f)

  // Nonzero values share the magnitude amp. Plateaued needs amp = 2^((n+s)/2)
  // and, restating Parseval, |supp| * amp^2 = 2^(2n); anything else is
  // Neither.
  if (std::popcount(static_cast<uint64_t>(amp)) != 1) return c;
  const int e = std::countr_zero(static_cast<uint64_t>(amp));
  const int order = 2 * e - s.n;
  if (order < 0 || order > s.n) return c;
  const __int128 parseval = static_cast<__int128>(size - zeros) * amp * amp;
  if (parseval != static_cast<__int128>(1) << (2 * s.n)) return c;

  c.amplitude = amp;
  if (zeros == 0 && order == 0) {
    c.kind = FunctionClass::Bent;
    c.s = 0;
  } else if (zeros > 0 && order >= 1) {
    c.kind = FunctionClass::Plateaued;
    c.s = order;
  } else {
    c.amplitude.reset();
  }
  return c;
}

Classification classify(const BooleanFunction& f) { return classify(wht(f)); }

bool support_fraction_check(const BooleanFunction& f) {
  const Classification c = classify(f);
  if (c.kind == FunctionClass::Neither)
    fail(ErrorCode::NotPlateaued, "support fraction is only defined for plateaued functions");
  return c.support_fraction.num == 1 && c.support_fraction.den == (int64_t{1} << c.s);
}

bool verify_restriction_plateaued(const BooleanFunction& f, const HyperplaneSpec& h) {
  if (!classify(f).is_bent())
    fail(ErrorCode::NotBent, "restriction check requires a bent function");
  return classify(restrict(f, h)).is_plateaued(1);
}

namespace {

// Both sides of the support identity, as (n-1)-variable truth tables: the
// reduced derivative on the left, the zero set of the restricted dual's
// spectrum on the right.
bool derivative_support_matches(const BooleanFunction& f, uint64_t direction,
                                const HyperplaneSpec& dual_restriction) {
  const BooleanFunction left = reduce_derivative_dir(f, direction);
  const BooleanFunction dual = dual_bent(f);
  const Spectrum s = wht(restrict(dual, dual_restriction));
  BooleanFunction right = BooleanFunction::zero(f.n() - 1);
  for (uint64_t y = 0; y < s.coeffs.size(); ++y)
    if (s.coeffs[y] == 0) right.set(y, true);
  return left == right;
}

}  // namespace

bool verify_derivative_support(const BooleanFunction& f, int i) {
  if (!classify(f).is_bent())
    fail(ErrorCode::NotBent, "derivative-support check requires a bent function");
  if (i < 1 || i > f.n())
    fail(ErrorCode::IndexOutOfRange, "coordinate index outside [1, n]");
  const uint64_t e = uint64_t{1} << (i - 1);
  return derivative_support_matches(f, e, HyperplaneSpec(e, 0));
}

bool verify_derivative_support_dir(const BooleanFunction& f, uint64_t a) {
  if (!classify(f).is_bent())
    fail(ErrorCode::NotBent, "derivative-support check requires a bent function");
  if (a == 0) fail(ErrorCode::ZeroDirection, "direction must be nonzero");
  return derivative_support_matches(f, a, HyperplaneSpec(a, 0));
}

}  // namespace bentforge
