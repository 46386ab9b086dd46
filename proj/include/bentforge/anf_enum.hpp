#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "bentforge/error.hpp"
#include "bentforge/exec.hpp"

namespace bentforge {

// Basis of the monomials x^y with popcount(y) <= k over n variables,
// ascending in y, together with the bit-packed truth table of each monomial
// (bit x set iff y is a bitwise subset of x).
struct MonomialBasis {
  int n = 0;
  int k = 0;
  std::vector<uint64_t> monomials;
  std::vector<std::vector<uint64_t>> patterns;
  size_t table_words = 1;
};

MonomialBasis make_monomial_basis(int n, int k);

namespace detail {

inline void xor_into(uint64_t* dst, const std::vector<uint64_t>& src) {
  for (size_t i = 0; i < src.size(); ++i) dst[i] ^= src[i];
}

}  // namespace detail

// Visits the truth table of every ANF coefficient vector over the basis,
// each exactly once: 2^m tables for m monomials. visit(chunk, table) may be
// called from different workers for different chunk indices, never
// concurrently for the same one; callers keep one accumulator per chunk and
// merge with an order-independent reduction.
//
// The Serial path rebuilds every table from its subset index and visits in
// plain index order; the Parallel path walks each chunk in Gray-code order
// so successive tables differ by a single monomial pattern.
template <class Visit>
void for_each_anf_table(const MonomialBasis& basis, Exec exec, int chunks,
                        Visit&& visit) {
  const int m = static_cast<int>(basis.monomials.size());
  if (m >= 63) fail(ErrorCode::SpaceTooLarge, "ANF space exceeds 2^62");
  const uint64_t total = uint64_t{1} << m;
  const size_t words = basis.table_words;

  if (exec == Exec::Serial || chunks <= 1) {
    std::vector<uint64_t> table(words);
    for (uint64_t idx = 0; idx < total; ++idx) {
      std::fill(table.begin(), table.end(), 0);
      for (uint64_t bits = idx; bits; bits &= bits - 1)
        detail::xor_into(table.data(), basis.patterns[std::countr_zero(bits)]);
      visit(0, table.data());
    }
    return;
  }

#pragma omp parallel for num_threads(chunks) schedule(static, 1)
  for (int c = 0; c < chunks; ++c) {
    const uint64_t lo = total / chunks * c + std::min<uint64_t>(total % chunks, c);
    const uint64_t hi = lo + total / chunks + (static_cast<uint64_t>(c) < total % chunks ? 1 : 0);
    if (lo >= hi) continue;
    std::vector<uint64_t> table(words, 0);
    // Seed the chunk with the Gray code of lo, then single-flip forward.
    for (uint64_t bits = lo ^ (lo >> 1); bits; bits &= bits - 1)
      detail::xor_into(table.data(), basis.patterns[std::countr_zero(bits)]);
    visit(c, table.data());
    for (uint64_t idx = lo + 1; idx < hi; ++idx) {
      detail::xor_into(table.data(), basis.patterns[std::countr_zero(idx)]);
      visit(c, table.data());
    }
  }
}

}  // namespace bentforge
