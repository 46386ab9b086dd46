#include "bentforge/spectral.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace bentforge {

namespace {

constexpr uint64_t kVarMaskNeg[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

// Stage sizes below this are not worth a parallel region.
constexpr size_t kParallelCutoff = size_t{1} << 15;

void check_same_n(const RealFunction& a, const RealFunction& b) {
  if (a.n != b.n || a.values.size() != b.values.size())
    fail(ErrorCode::DimensionMismatch, "functions live on different cubes");
}

void check_sized(const RealFunction& h) {
  if (h.values.size() != (uint64_t{1} << h.n))
    fail(ErrorCode::LengthMismatch, "value array is not 2^n long");
}

int64_t exact_shift_div(int64_t v, int shift, const char* what) {
  if (shift > 0 && (v & ((int64_t{1} << shift) - 1)) != 0)
    throw std::logic_error(std::string("inexact division in ") + what);
  return v >> shift;  // v is a multiple of 2^shift, sign-safe
}

}  // namespace

void fourier_inplace_serial(std::span<int64_t> v) {
  const size_t size = v.size();
  for (size_t step = 1; step < size; step <<= 1) {
    for (size_t i = 0; i < size; i += 2 * step) {
      for (size_t j = i; j < i + step; ++j) {
        const int64_t a = v[j];
        const int64_t b = v[j + step];
        v[j] = a + b;
        v[j + step] = a - b;
      }
    }
  }
}

void fourier_inplace(std::span<int64_t> v, Exec exec) {
  const size_t size = v.size();
  if (size == 0 || (size & (size - 1)) != 0)
    fail(ErrorCode::LengthMismatch, "transform size must be a power of two");
  const int workers = worker_count();
  if (exec == Exec::Serial || workers <= 1 || size < kParallelCutoff) {
    fourier_inplace_serial(v);
    return;
  }
  int64_t* data = v.data();
  const size_t half = size / 2;
  for (int stage = 0; (size_t{1} << stage) < size; ++stage) {
    const size_t step = size_t{1} << stage;
#pragma omp parallel for num_threads(workers) schedule(static)
    for (size_t k = 0; k < half; ++k) {
      const size_t j = ((k >> stage) << (stage + 1)) | (k & (step - 1));
      const int64_t a = data[j];
      const int64_t b = data[j + step];
      data[j] = a + b;
      data[j + step] = a - b;
    }
  }
}

Spectrum wht(const BooleanFunction& f, Exec exec) {
  Spectrum s;
  s.n = f.n();
  s.coeffs.resize(f.domain_size());
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    s.coeffs[x] = f.get(x) ? -1 : 1;
  fourier_inplace(s.coeffs, exec);
  return s;
}

RealFunction fourier(const RealFunction& h, Exec exec) {
  check_sized(h);
  RealFunction out = h;
  fourier_inplace(out.values, exec);
  return out;
}

BooleanFunction inverse_wht(const Spectrum& s) {
  if (s.coeffs.size() != (uint64_t{1} << s.n))
    fail(ErrorCode::LengthMismatch, "spectrum is not 2^n long");
  std::vector<int64_t> v = s.coeffs;
  fourier_inplace(v);
  const int64_t scale = int64_t{1} << s.n;  // transforming twice multiplies by 2^n
  BooleanFunction f = BooleanFunction::zero(s.n);
  for (uint64_t x = 0; x < v.size(); ++x) {
    if (v[x] != scale && v[x] != -scale)
      fail(ErrorCode::NotBooleanSpectrum,
           "reconstructed value " + std::to_string(v[x] / static_cast<double>(scale)) +
               " at x=" + std::to_string(x) + " is not +-1");
    if (v[x] < 0) f.set(x, true);
  }
  return f;
}

Anf mobius(const BooleanFunction& f) {
  const int n = f.n();
  std::vector<uint64_t> words = f.words();
  for (int b = 0; b < std::min(n, 6); ++b) {
    const int d = 1 << b;
    for (auto& w : words) w ^= (w & kVarMaskNeg[b]) << d;
  }
  for (int b = 6; b < n; ++b) {
    const size_t stride = size_t{1} << (b - 6);
    for (size_t i = 0; i < words.size(); ++i)
      if (i & stride) words[i] ^= words[i ^ stride];
  }
  Anf a;
  a.n = n;
  a.coeffs = BooleanFunction::from_words(n, std::move(words));
  a.degree = 0;
  for (size_t wi = 0; wi < a.coeffs.words().size(); ++wi) {
    uint64_t w = a.coeffs.words()[wi];
    while (w) {
      const uint64_t y = (uint64_t{wi} << 6) | static_cast<uint64_t>(std::countr_zero(w));
      a.degree = std::max(a.degree, std::popcount(y));
      w &= w - 1;
    }
  }
  return a;
}

BooleanFunction mobius_inverse(const Anf& a) {
  Anf back = mobius(a.coeffs);  // the transform is an involution
  return back.coeffs;
}

int degree(const BooleanFunction& f) { return mobius(f).degree; }

RealFunction convolve(const RealFunction& h, const RealFunction& g) {
  check_sized(h);
  check_same_n(h, g);
  RealFunction a = fourier(h);
  RealFunction b = fourier(g);
  for (size_t i = 0; i < a.values.size(); ++i) a.values[i] *= b.values[i];
  fourier_inplace(a.values);
  for (auto& v : a.values) v = exact_shift_div(v, h.n, "convolve");
  return a;
}

RealFunction coset_sum(const RealFunction& h, uint64_t a) {
  check_sized(h);
  if (a == 0) fail(ErrorCode::ZeroDirection, "coset direction must be nonzero");
  if (a >= h.values.size()) fail(ErrorCode::BadInput, "direction outside F_2^n");

  RealFunction direct;
  direct.n = h.n;
  direct.values.resize(h.values.size());
  for (uint64_t x = 0; x < h.values.size(); ++x)
    direct.values[x] = h.values[x] + h.values[x ^ a];

  // Transform route: mask the spectrum to Gamma = {y : <y,a> = 0}, transform
  // again, divide by 2^(n-1); must agree entry for entry.
  RealFunction t = fourier(h);
  for (uint64_t y = 0; y < t.values.size(); ++y)
    if (parity64(y & a)) t.values[y] = 0;
  fourier_inplace(t.values);
  for (uint64_t x = 0; x < t.values.size(); ++x) {
    const int64_t rhs = exact_shift_div(t.values[x], h.n - 1, "coset_sum");
    if (rhs != direct.values[x])
      throw std::logic_error("coset_sum: transform route disagrees with direct sum");
  }
  return direct;
}

BooleanFunction dual_bent(const BooleanFunction& f) {
  const int n = f.n();
  if (n % 2 != 0) fail(ErrorCode::NotBent, "bent functions need an even variable count");
  const Spectrum s = wht(f);
  const int64_t amp = int64_t{1} << (n / 2);
  BooleanFunction g = BooleanFunction::zero(n);
  for (uint64_t y = 0; y < s.coeffs.size(); ++y) {
    if (s.coeffs[y] != amp && s.coeffs[y] != -amp)
      fail(ErrorCode::NotBent, "function is not bent: |W| != 2^(n/2) at y=" +
                                   std::to_string(y));
    if (s.coeffs[y] < 0) g.set(y, true);
  }
  return g;
}

bool parseval_check(const RealFunction& h) {
  check_sized(h);
  const RealFunction t = fourier(h);
  __int128 lhs = 0, rhs = 0;
  for (int64_t v : t.values) lhs += static_cast<__int128>(v) * v;
  for (int64_t v : h.values) rhs += static_cast<__int128>(v) * v;
  return lhs == rhs * static_cast<__int128>(int64_t{1} << h.n);
}

bool parseval_check(const Spectrum& s) {
  __int128 sum = 0;
  for (int64_t v : s.coeffs) sum += static_cast<__int128>(v) * v;
  return sum == static_cast<__int128>(1) << (2 * s.n);
}

RealFunction to_pm_one(const BooleanFunction& f) {
  RealFunction h;
  h.n = f.n();
  h.values.resize(f.domain_size());
  for (uint64_t x = 0; x < f.domain_size(); ++x) h.values[x] = f.get(x) ? -1 : 1;
  return h;
}

RealFunction subspace_indicator(int n, uint64_t normal) {
  RealFunction h;
  h.n = n;
  h.values.resize(uint64_t{1} << n);
  for (uint64_t y = 0; y < h.values.size(); ++y)
    h.values[y] = parity64(y & normal) ? 0 : 1;
  return h;
}

RealFunction pair_indicator(int n, uint64_t a) {
  RealFunction h;
  h.n = n;
  h.values.assign(uint64_t{1} << n, 0);
  h.values[0] = 1;
  h.values[a] = 1;
  return h;
}

RealFunction delta_at(int n, uint64_t x) {
  RealFunction h;
  h.n = n;
  h.values.assign(uint64_t{1} << n, 0);
  h.values[x] = 1;
  return h;
}

uint64_t spectrum_zeros(const Spectrum& s) {
  uint64_t z = 0;
  for (int64_t v : s.coeffs) z += (v == 0);
  return z;
}

}  // namespace bentforge
