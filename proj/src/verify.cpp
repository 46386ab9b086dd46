#include "bentforge/verify.hpp"

#include <omp.h>

#include <algorithm>
#include <tuple>

#include "bentforge/counting.hpp"
#include "bentforge/text_io.hpp"

namespace bentforge {

namespace {

int current_chunk() { return omp_in_parallel() ? omp_get_thread_num() : 0; }

// Runs `body(f, out)` for every function of the exhaustive bent census on n
// variables, merging per-worker failure lists in function order.
template <class Body>
VerifyReport run_over_bent_census(const std::string& suite, int n, Exec exec,
                                  uint64_t cases_per_function, Body&& body) {
  const BentSet bents = enumerate_bent(n, exec);
  const int chunks = exec == Exec::Parallel ? worker_count() : 1;
  std::vector<std::vector<Counterexample>> partial(chunks);
  const int64_t count = static_cast<int64_t>(bents.functions.size());
#pragma omp parallel for num_threads(chunks) schedule(static) if (exec == Exec::Parallel)
  for (int64_t idx = 0; idx < count; ++idx)
    body(bents.functions[idx], partial[current_chunk()]);

  VerifyReport report;
  report.suite = suite;
  report.n = n;
  report.cases = bents.functions.size() * cases_per_function;
  for (auto& part : partial)
    report.failures.insert(report.failures.end(),
                           std::make_move_iterator(part.begin()),
                           std::make_move_iterator(part.end()));
  std::sort(report.failures.begin(), report.failures.end(),
            [](const Counterexample& a, const Counterexample& b) {
              return std::tie(a.function_hex, a.normal, a.side) <
                     std::tie(b.function_hex, b.normal, b.side);
            });
  return report;
}

std::vector<uint64_t> support_of(const BooleanFunction& f) {
  std::vector<uint64_t> s;
  for (uint64_t x = 0; x < f.domain_size(); ++x)
    if (f.get(x)) s.push_back(x);
  return s;
}

}  // namespace

VerifyReport run_support_fraction_suite(int n, Exec exec) {
  const uint64_t hyperplanes = (uint64_t{1} << n) - 1;
  return run_over_bent_census(
      "prop1", n, exec, 1 + hyperplanes * 2,
      [n](const BooleanFunction& f, std::vector<Counterexample>& out) {
        if (!support_fraction_check(f)) {
          out.push_back({to_hex_string(f), "bent support fraction is not 1", 0, -1, {}, {}});
        }
        for (uint64_t a = 1; a < (uint64_t{1} << n); ++a) {
          for (int side = 0; side < 2; ++side) {
            const BooleanFunction r = restrict(f, HyperplaneSpec(a, side));
            if (!support_fraction_check(r))
              out.push_back({to_hex_string(f),
                             "restriction support fraction is not 2^-s", a, side, {}, {}});
          }
        }
      });
}

VerifyReport run_restriction_plateaued_suite(int n, Exec exec) {
  const uint64_t hyperplanes = (uint64_t{1} << n) - 1;
  return run_over_bent_census(
      "bentpla1", n, exec, hyperplanes * 2,
      [n](const BooleanFunction& f, std::vector<Counterexample>& out) {
        for (uint64_t a = 1; a < (uint64_t{1} << n); ++a) {
          for (int side = 0; side < 2; ++side) {
            if (!verify_restriction_plateaued(f, HyperplaneSpec(a, side)))
              out.push_back({to_hex_string(f),
                             "restriction does not classify as Plateaued(1)", a, side, {}, {}});
          }
        }
      });
}

VerifyReport run_derivative_support_suite(int n, Exec exec) {
  const uint64_t directions = (uint64_t{1} << n) - 1;
  return run_over_bent_census(
      "shap1", n, exec, static_cast<uint64_t>(n) + directions,
      [n](const BooleanFunction& f, std::vector<Counterexample>& out) {
        auto spectrum_zero_set = [&](uint64_t a) {
          const Spectrum s = wht(restrict(dual_bent(f), HyperplaneSpec(a, 0)));
          std::vector<uint64_t> zeros;
          for (uint64_t y = 0; y < s.coeffs.size(); ++y)
            if (s.coeffs[y] == 0) zeros.push_back(y);
          return zeros;
        };
        for (int i = 1; i <= n; ++i) {
          if (!verify_derivative_support(f, i)) {
            Counterexample ce{to_hex_string(f),
                              "coordinate derivative support mismatch",
                              uint64_t{1} << (i - 1), 0, {}, {}};
            ce.left_support = support_of(reduce_derivative(f, i));
            ce.right_support = spectrum_zero_set(uint64_t{1} << (i - 1));
            out.push_back(std::move(ce));
          }
        }
        for (uint64_t a = 1; a < (uint64_t{1} << n); ++a) {
          if (!verify_derivative_support_dir(f, a)) {
            Counterexample ce{to_hex_string(f),
                              "general-direction derivative support mismatch", a, 0, {}, {}};
            ce.left_support = support_of(reduce_derivative_dir(f, a));
            ce.right_support = spectrum_zero_set(a);
            out.push_back(std::move(ce));
          }
        }
      });
}

VerifyReport run_double_count_suite(int n, int max_space_bits, Exec exec) {
  VerifyReport report;
  report.suite = "thm2";
  report.n = n;
  for (int k = 1; k <= n; ++k) {
    if (monomial_count(n, k) > max_space_bits) break;
    ++report.cases;
    if (!verify_double_count(n, k, max_space_bits, exec))
      report.failures.push_back(
          {"", "zero total != balanced count * 2^n at k=" + std::to_string(k),
           static_cast<uint64_t>(k), -1, {}, {}});
  }
  return report;
}

}  // namespace bentforge
