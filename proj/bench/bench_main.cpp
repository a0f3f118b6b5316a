// Serial reference vs OpenMP kernel timings on desk-scale workloads.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include <omp.h>

#include "secmin/chow.hpp"
#include "secmin/granville.hpp"
#include "secmin/lattice.hpp"
#include "secmin/sampling.hpp"
#include "secmin/sieve.hpp"

using namespace secmin;

namespace {

double time_ms(const std::function<void()>& f, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, const std::function<void()>& serial, const std::function<void()>& omp, int reps = 3) {
  const double s = time_ms(serial, reps);
  const double p = time_ms(omp, reps);
  std::printf("%-28s serial_ms=%10.2f omp_ms=%10.2f speedup=%6.2f\n", name, s, p, s / p);
}

}  // namespace

int main(int argc, char** argv) {
  const int reps = argc > 1 ? std::stoi(argv[1]) : 3;
  std::printf("threads=%d reps=%d\n", omp_get_max_threads(), reps);

  const PrimePowerSieve sieve(1'000'000);
  row("theorem3 n<=1500", [&] { kernels::serial::theorem3_records(2, 1500, sieve); },
      [&] { kernels::omp::theorem3_records(2, 1500, sieve); }, reps);
  row("quarter_bound n<=1e6", [&] { kernels::serial::quarter_bound_violation(30, 1'000'000, sieve); },
      [&] { kernels::omp::quarter_bound_violation(30, 1'000'000, sieve); }, reps);
  row("c_sum_stats n<=1e6", [&] { kernels::serial::c_sum_stats(1'000'000, 0.535, sieve); },
      [&] { kernels::omp::c_sum_stats(1'000'000, 0.535, sieve); }, reps);

  std::vector<SecantParams> grid;
  for (std::uint64_t g = 0; g <= 6; ++g)
    for (std::uint64_t d = 1; d <= 6; ++d)
      for (std::uint64_t m = 3; m <= 30; ++m)
        if (SecantParams{g, m, d}.dimension_ok()) grid.push_back({g, m, d});
  row("secant_sweep g,d<=6 m<=30", [&] { kernels::serial::secant_sweep(grid); },
      [&] { kernels::omp::secant_sweep(grid); }, reps);

  const auto big = GramLattice::make(5, {3, 1, 0, 1, 0, 1, 4, 1, 0, 1, 0, 1, 5, 1, 0, 1, 0, 1, 4, 1, 0, 1, 0, 1, 3});
  row("enumerate rank5 R^2=60", [&] { kernels::serial::enumerate(big, 60, 10'000'000); },
      [&] { kernels::omp::enumerate(big, 60, 10'000'000); }, reps);

  const auto lats = random_grams(7, 200, 1, 3, 12);
  row("prop4_batch 200 lattices", [&] { kernels::serial::prop4_batch(lats, BallIndexing::printed); },
      [&] { kernels::omp::prop4_batch(lats, BallIndexing::printed); }, reps);
  return 0;
}
