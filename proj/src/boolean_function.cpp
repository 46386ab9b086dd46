#include "bentforge/boolean_function.hpp"

#include <algorithm>
#include <atomic>
#include <bit>

namespace bentforge {

namespace {

std::atomic<int> g_max_vars{24};

// Within-word masks: bit positions where index bit b is 0.
constexpr uint64_t kVarMaskNeg[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
};

size_t word_count(int n) { return n > 6 ? (size_t{1} << (n - 6)) : 1; }

uint64_t tail_mask(int n) {
  return n >= 6 ? ~uint64_t{0} : (uint64_t{1} << (uint64_t{1} << n)) - 1;
}

void check_n(int n) {
  if (n < 0) fail(ErrorCode::BadInput, "variable count must be nonnegative");
  if (n > BooleanFunction::max_variables())
    fail(ErrorCode::NTooLarge, "variable count " + std::to_string(n) +
                                   " exceeds the cap of " +
                                   std::to_string(BooleanFunction::max_variables()));
}

// Table with bit x equal to the input's bit x ^ a. An XOR translation of the
// index decomposes into independent single-bit swaps: delta-swaps inside each
// word for the low six index bits, a word permutation above that.
std::vector<uint64_t> xor_translate(const std::vector<uint64_t>& words, int n,
                                    uint64_t a) {
  std::vector<uint64_t> out(words);
  const int in_word = std::min(n, 6);
  for (int b = 0; b < in_word; ++b) {
    if (!((a >> b) & 1)) continue;
    const int d = 1 << b;
    for (auto& w : out) w = ((w >> d) & kVarMaskNeg[b]) | ((w & kVarMaskNeg[b]) << d);
  }
  const uint64_t hi = a >> 6;
  if (hi) {
    std::vector<uint64_t> tmp(out.size());
    for (size_t i = 0; i < out.size(); ++i) tmp[i] = out[i ^ hi];
    out.swap(tmp);
  }
  return out;
}

}  // namespace

int BooleanFunction::max_variables() { return g_max_vars.load(); }
void BooleanFunction::set_max_variables(int cap) { g_max_vars.store(cap); }

BooleanFunction BooleanFunction::zero(int n) {
  check_n(n);
  BooleanFunction f;
  f.n_ = n;
  f.words_.assign(word_count(n), 0);
  return f;
}

BooleanFunction BooleanFunction::from_truth_table(std::span<const uint8_t> bits,
                                                  int n) {
  check_n(n);
  if (bits.size() != (uint64_t{1} << n))
    fail(ErrorCode::LengthMismatch,
         "truth table has " + std::to_string(bits.size()) + " entries, expected " +
             std::to_string(uint64_t{1} << n));
  BooleanFunction f = zero(n);
  for (uint64_t x = 0; x < bits.size(); ++x)
    if (bits[x]) f.words_[x >> 6] |= uint64_t{1} << (x & 63);
  return f;
}

BooleanFunction BooleanFunction::from_words(int n, std::vector<uint64_t> words) {
  check_n(n);
  if (words.size() != word_count(n))
    fail(ErrorCode::LengthMismatch, "wrong word count for n=" + std::to_string(n));
  BooleanFunction f;
  f.n_ = n;
  f.words_ = std::move(words);
  f.words_.back() &= tail_mask(n);
  return f;
}

void BooleanFunction::set(uint64_t x, bool v) {
  if (v)
    words_[x >> 6] |= uint64_t{1} << (x & 63);
  else
    words_[x >> 6] &= ~(uint64_t{1} << (x & 63));
}

uint64_t BooleanFunction::weight() const {
  uint64_t w = 0;
  for (uint64_t word : words_) w += std::popcount(word);
  return w;
}

bool BooleanFunction::is_balanced() const {
  if (n_ == 0) return false;  // a single-point domain cannot split evenly
  return weight() == domain_size() / 2;
}

BooleanFunction BooleanFunction::complement() const {
  BooleanFunction f(*this);
  for (auto& w : f.words_) w = ~w;
  f.words_.back() &= tail_mask(n_);
  return f;
}

std::strong_ordering BooleanFunction::operator<=>(const BooleanFunction& o) const {
  if (auto c = n_ <=> o.n_; c != 0) return c;
  for (size_t i = words_.size(); i-- > 0;)
    if (auto c = words_[i] <=> o.words_[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

HyperplaneSpec::HyperplaneSpec(uint64_t normal, int side)
    : normal_(normal), side_(side) {
  if (normal == 0) fail(ErrorCode::ZeroDirection, "hyperplane normal must be nonzero");
  if (side != 0 && side != 1) fail(ErrorCode::BadInput, "hyperplane side must be 0 or 1");
}

AffineMap::AffineMap(int n, std::vector<uint64_t> rows, uint64_t shift,
                     uint64_t linear, int constant)
    : n_(n), rows_(std::move(rows)), shift_(shift), linear_(linear),
      constant_(constant & 1) {
  if (n < 0 || n > BooleanFunction::max_variables())
    fail(ErrorCode::BadInput, "bad dimension for affine map");
  if (rows_.size() != static_cast<size_t>(n))
    fail(ErrorCode::BadInput, "affine map needs one row per variable");
  const uint64_t mask = n >= 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (auto& r : rows_) r &= mask;
  shift_ &= mask;
  linear_ &= mask;
  if (!is_invertible(rows_, n))
    fail(ErrorCode::SingularMatrix, "affine map matrix is singular over F_2");
}

AffineMap AffineMap::identity(int n) {
  std::vector<uint64_t> rows(n);
  for (int i = 0; i < n; ++i) rows[i] = uint64_t{1} << i;
  return AffineMap(n, std::move(rows), 0, 0, 0);
}

uint64_t AffineMap::apply_matrix(uint64_t x) const {
  uint64_t y = 0;
  for (int i = 0; i < n_; ++i)
    y |= static_cast<uint64_t>(parity64(rows_[i] & x)) << i;
  return y;
}

bool is_invertible(const std::vector<uint64_t>& rows, int n) {
  std::vector<uint64_t> m(rows);
  int rank = 0;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if ((m[r] >> col) & 1) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    std::swap(m[rank], m[pivot]);
    for (int r = 0; r < n; ++r)
      if (r != rank && ((m[r] >> col) & 1)) m[r] ^= m[rank];
    ++rank;
  }
  return rank == n;
}

uint64_t weight(const BooleanFunction& f) { return f.weight(); }
bool is_balanced(const BooleanFunction& f) { return f.is_balanced(); }

BooleanFunction derivative(const BooleanFunction& f, uint64_t a) {
  if (a >= f.domain_size())
    fail(ErrorCode::BadInput, "direction outside F_2^n");
  if (a == 0) return BooleanFunction::zero(f.n());
  std::vector<uint64_t> shifted = xor_translate(f.words(), f.n(), a);
  for (size_t i = 0; i < shifted.size(); ++i) shifted[i] ^= f.words()[i];
  return BooleanFunction::from_words(f.n(), std::move(shifted));
}

BooleanFunction restrict(const BooleanFunction& f, const HyperplaneSpec& h) {
  const int n = f.n();
  if (n < 1) fail(ErrorCode::BadInput, "cannot restrict a 0-variable function");
  if (h.normal() >= f.domain_size())
    fail(ErrorCode::BadInput, "hyperplane normal outside F_2^n");
  const int p = std::countr_zero(h.normal());
  const uint64_t rest = h.normal() ^ (uint64_t{1} << p);
  const uint64_t low_mask = (uint64_t{1} << p) - 1;
  BooleanFunction g = BooleanFunction::zero(n - 1);
  for (uint64_t xp = 0; xp < g.domain_size(); ++xp) {
    uint64_t x = (xp & low_mask) | ((xp >> p) << (p + 1));
    const uint64_t pivot = (h.side() ^ parity64(x & rest)) & 1;
    x |= pivot << p;
    if (f.get(x)) g.set(xp, true);
  }
  return g;
}

BooleanFunction reduce_derivative(const BooleanFunction& f, int i) {
  if (i < 1 || i > f.n())
    fail(ErrorCode::IndexOutOfRange,
         "coordinate index " + std::to_string(i) + " outside [1, n]");
  const uint64_t a = uint64_t{1} << (i - 1);
  return restrict(derivative(f, a), HyperplaneSpec(a, 0));
}

BooleanFunction reduce_derivative_dir(const BooleanFunction& f, uint64_t a) {
  if (a == 0) fail(ErrorCode::ZeroDirection, "derivative direction must be nonzero");
  if (a >= f.domain_size()) fail(ErrorCode::BadInput, "direction outside F_2^n");
  const int p = std::countr_zero(a);
  return restrict(derivative(f, a), HyperplaneSpec(uint64_t{1} << p, 0));
}

BooleanFunction apply_affine(const BooleanFunction& f, const AffineMap& m) {
  if (m.n() != f.n())
    fail(ErrorCode::DimensionMismatch, "affine map dimension differs from function");
  BooleanFunction g = BooleanFunction::zero(f.n());
  for (uint64_t x = 0; x < f.domain_size(); ++x) {
    const uint64_t y = m.apply_matrix(x) ^ m.shift();
    const int bit = static_cast<int>(f.get(y)) ^ parity64(x & m.linear()) ^ m.constant();
    if (bit) g.set(x, true);
  }
  return g;
}

}  // namespace bentforge
