#include "bentforge/census.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <stdexcept>

#include "bentforge/anf_enum.hpp"
#include "bentforge/classify.hpp"
#include "bentforge/counting.hpp"
#include "bentforge/spectral.hpp"

namespace bentforge {

namespace {

// Bentness test on a truth table packed into the low 2^n bits of an integer,
// n <= 5. Stack-only butterfly; the hot inner loop of the exhaustive census.
bool is_bent_table(uint64_t table, int n) {
  int32_t v[32];
  const uint32_t size = 1u << n;
  for (uint32_t x = 0; x < size; ++x) v[x] = (table >> x) & 1 ? -1 : 1;
  for (uint32_t step = 1; step < size; step <<= 1) {
    for (uint32_t i = 0; i < size; i += 2 * step) {
      for (uint32_t j = i; j < i + step; ++j) {
        const int32_t a = v[j];
        const int32_t b = v[j + step];
        v[j] = a + b;
        v[j + step] = a - b;
      }
    }
  }
  const int32_t amp = 1 << (n / 2);
  for (uint32_t y = 0; y < size; ++y)
    if (v[y] != amp && v[y] != -amp) return false;
  return true;
}

int current_chunk() { return omp_in_parallel() ? omp_get_thread_num() : 0; }

std::vector<BooleanFunction> collect_derivative_images(const BentSet& bents,
                                                       Exec exec) {
  const int n = bents.n;
  std::vector<uint64_t> directions;
  if (bents.exhaustive) {
    for (uint64_t a = 1; a < (uint64_t{1} << n); ++a) directions.push_back(a);
  } else {
    for (int i = 0; i < n; ++i) directions.push_back(uint64_t{1} << i);
  }

  const int chunks = exec == Exec::Parallel ? worker_count() : 1;
  std::vector<std::vector<BooleanFunction>> partial(chunks);
  const int64_t count = static_cast<int64_t>(bents.functions.size());
#pragma omp parallel for num_threads(chunks) schedule(static) if (exec == Exec::Parallel)
  for (int64_t idx = 0; idx < count; ++idx) {
    const int c = current_chunk();
    for (uint64_t a : directions)
      partial[c].push_back(reduce_derivative_dir(bents.functions[idx], a));
  }

  std::vector<BooleanFunction> images;
  for (auto& part : partial)
    images.insert(images.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace

BentSet enumerate_bent(int n, Exec exec) {
  if (n >= 6) fail(ErrorCode::TooLarge, "exhaustive bent enumeration is only feasible for n <= 4");
  if (n != 2 && n != 4) fail(ErrorCode::BadInput, "exhaustive enumeration expects n in {2, 4}");

  const uint64_t total = uint64_t{1} << (uint64_t{1} << n);
  BentSet out;
  out.n = n;
  out.exhaustive = true;

  if (exec == Exec::Serial) {
    for (uint64_t t = 0; t < total; ++t)
      if (is_bent_table(t, n))
        out.functions.push_back(BooleanFunction::from_words(n, {t}));
    return out;
  }

  const int chunks = worker_count();
  std::vector<std::vector<uint64_t>> found(chunks);
#pragma omp parallel for num_threads(chunks) schedule(static)
  for (int c = 0; c < chunks; ++c) {
    const uint64_t lo = total / chunks * c + std::min<uint64_t>(total % chunks, c);
    const uint64_t hi = lo + total / chunks + (static_cast<uint64_t>(c) < total % chunks ? 1 : 0);
    for (uint64_t t = lo; t < hi; ++t)
      if (is_bent_table(t, n)) found[c].push_back(t);
  }
  for (const auto& part : found)  // chunk ranges are ascending, so order is canonical
    for (uint64_t t : part)
      out.functions.push_back(BooleanFunction::from_words(n, {t}));
  return out;
}

BentSet sample_mm_bent(int n, int count, uint64_t seed) {
  if (n < 2 || n % 2 != 0 || n > 16)
    fail(ErrorCode::BadInput, "Maiorana-McFarland sampling expects even n in [2, 16]");
  if (count < 0) fail(ErrorCode::BadInput, "negative sample count");
  const int m = n / 2;
  const uint64_t half = uint64_t{1} << m;

  std::mt19937_64 rng(seed);
  std::vector<uint32_t> pi(half);
  std::vector<uint8_t> hbits(half);
  std::set<BooleanFunction> distinct;

  uint64_t attempts = 0;
  const uint64_t max_attempts = 1000 + 200ull * static_cast<uint64_t>(count);
  while (distinct.size() < static_cast<size_t>(count)) {
    if (++attempts > max_attempts)
      fail(ErrorCode::BadInput,
           "could not draw that many distinct Maiorana-McFarland functions");
    for (uint64_t i = 0; i < half; ++i) pi[i] = static_cast<uint32_t>(i);
    // Fisher-Yates with explicit modulo draws so the stream is fixed by the
    // seed alone, independent of the standard library.
    for (uint64_t i = half - 1; i > 0; --i)
      std::swap(pi[i], pi[rng() % (i + 1)]);
    for (uint64_t i = 0; i < half; ++i) hbits[i] = rng() & 1;

    BooleanFunction f = BooleanFunction::zero(n);
    for (uint64_t idx = 0; idx < f.domain_size(); ++idx) {
      const uint64_t x = idx & (half - 1);
      const uint64_t y = idx >> m;
      if (parity64(x & pi[y]) ^ hbits[y]) f.set(idx, true);
    }
    if (!classify(f).is_bent())
      throw std::logic_error("Maiorana-McFarland sample failed the bent check");
    distinct.insert(std::move(f));
  }

  BentSet out;
  out.n = n;
  out.exhaustive = false;
  out.functions.assign(distinct.begin(), distinct.end());
  return out;
}

CensusReport derivative_census(const BentSet& bents, int max_anf_space_bits,
                               Exec exec) {
  const int n = bents.n;
  if (n < 2 || n % 2 != 0) fail(ErrorCode::BadInput, "census expects an even n >= 2");

  CensusReport report;
  report.n = n;
  report.images_complete = bents.exhaustive;
  report.derivative_images = collect_derivative_images(bents, exec);

  const int k = n / 2 - 1;
  const BigInt space = monomial_count(n - 1, k);
  if (space > max_anf_space_bits)
    fail(ErrorCode::CandidateSpaceTooLarge,
         "candidate ANF space needs 2^" + space.str() + " enumerations, cap is 2^" +
             std::to_string(max_anf_space_bits));

  const MonomialBasis basis = make_monomial_basis(n - 1, k);
  const uint64_t half = (uint64_t{1} << (n - 1)) / 2;
  const int chunks = exec == Exec::Parallel ? worker_count() : 1;
  std::vector<std::vector<BooleanFunction>> partial(chunks);
  for_each_anf_table(basis, exec, chunks, [&](int c, const uint64_t* table) {
    uint64_t w = 0;
    for (size_t i = 0; i < basis.table_words; ++i) w += std::popcount(table[i]);
    if (w == half)
      partial[c].push_back(BooleanFunction::from_words(
          n - 1, std::vector<uint64_t>(table, table + basis.table_words)));
  });
  for (auto& part : partial)
    report.candidates.insert(report.candidates.end(),
                             std::make_move_iterator(part.begin()),
                             std::make_move_iterator(part.end()));
  std::sort(report.candidates.begin(), report.candidates.end());

  std::set_difference(report.candidates.begin(), report.candidates.end(),
                      report.derivative_images.begin(), report.derivative_images.end(),
                      std::back_inserter(report.non_derivatives));
  return report;
}

bool verify_double_count(int n, int k, int max_anf_space_bits, Exec exec) {
  if (n < 1 || k < 0) fail(ErrorCode::BadInput, "double count expects n >= 1, k >= 0");
  const BigInt space = monomial_count(n, k);
  if (space > max_anf_space_bits)
    fail(ErrorCode::CandidateSpaceTooLarge,
         "ANF space needs 2^" + space.str() + " enumerations, cap is 2^" +
             std::to_string(max_anf_space_bits));

  const MonomialBasis basis = make_monomial_basis(n, k);
  const uint64_t size = uint64_t{1} << n;
  const int chunks = exec == Exec::Parallel ? worker_count() : 1;
  std::vector<uint64_t> zero_sums(chunks, 0);
  std::vector<uint64_t> balanced_counts(chunks, 0);
  for_each_anf_table(basis, exec, chunks, [&](int c, const uint64_t* table) {
    std::vector<int64_t> walsh(size);
    for (uint64_t x = 0; x < size; ++x)
      walsh[x] = (table[x >> 6] >> (x & 63)) & 1 ? -1 : 1;
    fourier_inplace_serial(walsh);
    uint64_t zeros = 0;
    for (int64_t w : walsh) zeros += (w == 0);
    zero_sums[c] += zeros;
    balanced_counts[c] += (walsh[0] == 0);
  });

  uint64_t total_zeros = 0, balanced = 0;
  for (int c = 0; c < chunks; ++c) {
    total_zeros += zero_sums[c];
    balanced += balanced_counts[c];
  }
  return total_zeros == balanced * size;
}

bool is_derivative_of_some_bent(const BooleanFunction& f) {
  const int m = f.n();
  if (m > 3)
    fail(ErrorCode::TooLarge, "exhaustive derivative membership needs at most 3 variables");
  if (m % 2 == 0) return false;  // would need a bent function on an odd cube
  const BentSet bents = enumerate_bent(m + 1);
  const std::vector<BooleanFunction> images = collect_derivative_images(bents, Exec::Parallel);
  return std::binary_search(images.begin(), images.end(), f);
}

std::vector<BooleanFunction> bent_restriction_images(const BentSet& bents, Exec exec) {
  const int n = bents.n;
  const int chunks = exec == Exec::Parallel ? worker_count() : 1;
  std::vector<std::vector<BooleanFunction>> partial(chunks);
  const int64_t count = static_cast<int64_t>(bents.functions.size());
#pragma omp parallel for num_threads(chunks) schedule(static) if (exec == Exec::Parallel)
  for (int64_t idx = 0; idx < count; ++idx) {
    const int c = current_chunk();
    for (uint64_t a = 1; a < (uint64_t{1} << n); ++a)
      for (int side = 0; side < 2; ++side)
        partial[c].push_back(restrict(bents.functions[idx], HyperplaneSpec(a, side)));
  }
  std::vector<BooleanFunction> images;
  for (auto& part : partial)
    images.insert(images.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  std::sort(images.begin(), images.end());
  images.erase(std::unique(images.begin(), images.end()), images.end());
  return images;
}

}  // namespace bentforge
