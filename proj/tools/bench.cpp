// Benchmark of the OpenMP kernels against their serial reference
// implementations. Each pair is checked for identical results before being
// timed, so this doubles as a smoke test for the parallel paths.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "bentforge/anf_enum.hpp"
#include "bentforge/census.hpp"
#include "bentforge/counting.hpp"
#include "bentforge/spectral.hpp"
#include "bentforge/verify.hpp"

using namespace bentforge;

namespace {

double seconds_of(const std::function<void()>& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int r = 0; r < reps; ++r) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count() / reps;
}

void row(const char* name, bool equal, double serial_s, double parallel_s) {
  std::printf("%-34s %8s %12.4f %12.4f %8.2fx\n", name, equal ? "match" : "MISMATCH",
              serial_s * 1e3, parallel_s * 1e3, serial_s / parallel_s);
}

}  // namespace

int main() {
  std::printf("%-34s %8s %12s %12s %8s\n", "kernel", "check", "serial ms",
              "parallel ms", "speedup");
  std::printf("workers: %d\n", worker_count());

  {
    std::mt19937_64 rng(7);
    const int n = 20;
    std::vector<int64_t> base(size_t{1} << n);
    for (auto& v : base) v = static_cast<int64_t>(rng() % 201) - 100;
    std::vector<int64_t> a = base, b = base;
    fourier_inplace_serial(a);
    fourier_inplace(b, Exec::Parallel);
    const bool equal = a == b;
    const double ts = seconds_of([&] { auto c = base; fourier_inplace_serial(c); }, 5);
    const double tp = seconds_of([&] { auto c = base; fourier_inplace(c, Exec::Parallel); }, 5);
    row("fourier n=20", equal, ts, tp);
  }

  {
    BentSet s, p;
    const double ts = seconds_of([&] { s = enumerate_bent(4, Exec::Serial); }, 3);
    const double tp = seconds_of([&] { p = enumerate_bent(4, Exec::Parallel); }, 3);
    row("enumerate_bent n=4", s.functions == p.functions, ts, tp);
  }

  {
    WeightDistribution s, p;
    const double ts = seconds_of([&] { s = exact_distribution(6, 2, 25, Exec::Serial); }, 1);
    const double tp = seconds_of([&] { p = exact_distribution(6, 2, 25, Exec::Parallel); }, 1);
    row("exact_distribution (6,2)", s.counts == p.counts, ts, tp);
  }

  {
    VerifyReport s, p;
    const double ts = seconds_of([&] { s = run_restriction_plateaued_suite(4, Exec::Serial); }, 1);
    const double tp = seconds_of([&] { p = run_restriction_plateaued_suite(4, Exec::Parallel); }, 1);
    row("restriction suite n=4", s.cases == p.cases && s.ok() == p.ok(), ts, tp);
  }

  {
    CensusReport s, p;
    const BentSet bents = enumerate_bent(4);
    const double ts = seconds_of([&] { s = derivative_census(bents, 25, Exec::Serial); }, 1);
    const double tp = seconds_of([&] { p = derivative_census(bents, 25, Exec::Parallel); }, 1);
    const bool equal = s.derivative_images == p.derivative_images &&
                       s.candidates == p.candidates &&
                       s.non_derivatives == p.non_derivatives;
    row("derivative_census n=4", equal, ts, tp);
  }

  return 0;
}
