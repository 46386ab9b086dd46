#include "bentforge/text_io.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace bentforge {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

int log2_exact(uint64_t v) {
  if (v == 0 || (v & (v - 1)) != 0) return -1;
  return std::countr_zero(v);
}

BooleanFunction parse_binary(const std::string& text) {
  const int n = log2_exact(text.size());
  if (n < 0)
    fail(ErrorCode::LengthMismatch,
         "binary truth table length must be a power of two, got " +
             std::to_string(text.size()));
  BooleanFunction f = BooleanFunction::zero(n);
  for (uint64_t x = 0; x < text.size(); ++x) {
    if (text[x] == '1')
      f.set(x, true);
    else if (text[x] != '0')
      fail(ErrorCode::BadInput, "binary truth table may only contain 0 and 1");
  }
  return f;
}

BooleanFunction parse_hex(const std::string& text) {
  const int d = log2_exact(text.size());
  if (d < 0)
    fail(ErrorCode::LengthMismatch,
         "hex truth table length must be a power of two, got " +
             std::to_string(text.size()));
  const int n = d + 2;  // 4 table bits per digit
  BooleanFunction f = BooleanFunction::zero(n);
  for (uint64_t i = 0; i < text.size(); ++i) {
    const int v = hex_value(text[i]);
    if (v < 0) fail(ErrorCode::BadInput, "invalid hex digit in truth table");
    for (int b = 0; b < 4; ++b)
      if ((v >> b) & 1) f.set(i * 4 + b, true);
  }
  return f;
}

}  // namespace

BooleanFunction parse_truth_table(const std::string& text, int n) {
  std::string body = text;
  bool force_hex = false;
  if (body.size() > 2 && (body.rfind("0x", 0) == 0 || body.rfind("0X", 0) == 0)) {
    force_hex = true;
    body = body.substr(2);
  }
  if (body.empty()) fail(ErrorCode::BadInput, "empty truth table");

  bool binary_chars = true;
  for (char c : body) {
    if (c != '0' && c != '1') binary_chars = false;
    if (hex_value(c) < 0)
      fail(ErrorCode::BadInput, "truth table must be binary or hex digits");
  }

  BooleanFunction f = [&] {
    if (force_hex) return parse_hex(body);
    if (!binary_chars) return parse_hex(body);
    if (n >= 0) {
      const uint64_t want_bits = uint64_t{1} << n;
      if (body.size() == want_bits) return parse_binary(body);
      if (n >= 2 && body.size() == want_bits / 4) return parse_hex(body);
      fail(ErrorCode::LengthMismatch,
           "truth table length " + std::to_string(body.size()) +
               " matches neither the binary nor the hex form for n=" +
               std::to_string(n));
    }
    // A string of only 0/1 digits defaults to the binary reading; use a 0x
    // prefix to force hex.
    return parse_binary(body);
  }();

  if (n >= 0 && f.n() != n)
    fail(ErrorCode::LengthMismatch,
         "truth table encodes n=" + std::to_string(f.n()) + ", expected n=" +
             std::to_string(n));
  return f;
}

std::string to_binary_string(const BooleanFunction& f) {
  std::string s(f.domain_size(), '0');
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (f.get(x)) s[x] = '1';
  return s;
}

std::string to_hex_string(const BooleanFunction& f) {
  if (f.n() < 2) {
    // Domains under 4 bits have no hex form; fall back to binary.
    return to_binary_string(f);
  }
  std::string s(f.domain_size() / 4, '0');
  for (uint64_t i = 0; i < s.size(); ++i) {
    int v = 0;
    for (int b = 0; b < 4; ++b)
      if (f.get(i * 4 + b)) v |= 1 << b;
    s[i] = "0123456789abcdef"[v];
  }
  return s;
}

std::string to_anf_string(const Anf& a) {
  std::vector<uint64_t> monomials;
  for (uint64_t y = 0; y < a.coeffs.domain_size(); ++y)
    if (a.coeffs.get(y)) monomials.push_back(y);
  if (monomials.empty()) return "0";

  // Highest degree first; within a degree, index-lexicographic. For masks
  // over the same popcount, comparing the reversed bit pattern orders the
  // variable lists lexicographically (x1*x2 < x1*x3 < x2*x3).
  std::sort(monomials.begin(), monomials.end(), [](uint64_t p, uint64_t q) {
    const int dp = std::popcount(p);
    const int dq = std::popcount(q);
    if (dp != dq) return dp > dq;
    // Lexicographic on ascending variable indices == numeric on the value
    // with the lowest set bit most significant; compare via bit reversal.
    uint64_t rp = 0, rq = 0;
    for (int b = 0; b < 64; ++b) {
      rp = (rp << 1) | ((p >> b) & 1);
      rq = (rq << 1) | ((q >> b) & 1);
    }
    return rp > rq;
  });

  std::string out;
  for (size_t i = 0; i < monomials.size(); ++i) {
    if (i) out += " + ";
    uint64_t y = monomials[i];
    if (y == 0) {
      out += "1";
      continue;
    }
    bool first = true;
    for (int b = 0; b < 64; ++b) {
      if ((y >> b) & 1) {
        if (!first) out += "*";
        out += "x" + std::to_string(b + 1);
        first = false;
      }
    }
  }
  return out;
}

}  // namespace bentforge
