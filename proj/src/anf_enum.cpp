#include "bentforge/anf_enum.hpp"

#include <bit>

namespace bentforge {

MonomialBasis make_monomial_basis(int n, int k) {
  if (n < 0 || k < 0) fail(ErrorCode::BadInput, "monomial basis needs n, k >= 0");
  MonomialBasis b;
  b.n = n;
  b.k = k;
  b.table_words = n > 6 ? (size_t{1} << (n - 6)) : 1;
  const uint64_t size = uint64_t{1} << n;

  for (uint64_t y = 0; y < size; ++y) {
    if (std::popcount(y) > k) continue;
    b.monomials.push_back(y);
    // Truth table of x^y: bit x set iff y is a subset of x. Split y into its
    // in-word part (a fixed 64-bit mask) and its word-index part.
    const uint64_t y_low = y & 63;
    const uint64_t y_high = y >> 6;
    uint64_t in_word = 0;
    const uint64_t bits = std::min<uint64_t>(size, 64);
    for (uint64_t j = 0; j < bits; ++j)
      if ((j & y_low) == y_low) in_word |= uint64_t{1} << j;
    std::vector<uint64_t> pattern(b.table_words);
    for (size_t w = 0; w < b.table_words; ++w)
      pattern[w] = ((w & y_high) == y_high) ? in_word : 0;
    b.patterns.push_back(std::move(pattern));
  }
  return b;
}

}  // namespace bentforge
