// OpenMP kernels for the granville range checks. Each mirrors the serial
// reference in granville.cpp and must return identical results.

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

#include "granville_detail.hpp"

namespace secmin::kernels::omp {

std::vector<GranvilleRecord> theorem3_records(std::uint64_t lo, std::uint64_t hi,
                                              const PrimePowerSieve& sieve) {
  if (hi < lo) return {};
  const auto count = static_cast<std::int64_t>(hi - lo + 1);
  std::vector<GranvilleRecord> out(static_cast<std::size_t>(count));
  // Cost grows with n; hand out the expensive tail first.
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = count - 1; i >= 0; --i)
    out[static_cast<std::size_t>(i)] = detail::theorem3_record(lo + static_cast<std::uint64_t>(i), sieve);
  return out;
}

std::optional<std::uint64_t> quarter_bound_violation(std::uint64_t lo, std::uint64_t hi,
                                                     const PrimePowerSieve& sieve) {
  std::uint64_t first = std::numeric_limits<std::uint64_t>::max();
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (4 * (n - sieve.largest_prime_power_leq(n)) > n) first = std::min(first, n);
  if (first == std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  return first;
}

CSumStats c_sum_stats(std::uint64_t hi, double exponent, const PrimePowerSieve& sieve) {
  CSumStats total;
  total.argmax = 2;
  std::uint64_t sum = 0;
#pragma omp parallel reduction(+ : sum)
  {
    CSumStats local;
    local.argmax = 2;
#pragma omp for schedule(static) nowait
    for (std::uint64_t j = 2; j <= hi; ++j) {
      const std::uint64_t c = j - sieve.largest_prime_power_leq(j);
      sum += c;
      const double ratio = static_cast<double>(c) / std::pow(static_cast<double>(j), exponent);
      if (ratio > local.max_ratio) {
        local.max_ratio = ratio;
        local.argmax = j;
      }
      if (j >= 3) local.rh_max_ratio = std::max(local.rh_max_ratio, static_cast<double>(c) / detail::rh_scale(j));
    }
    // Ties resolve to the smallest j, as in the serial scan.
#pragma omp critical
    {
      if (local.max_ratio > total.max_ratio ||
          (local.max_ratio == total.max_ratio && local.max_ratio > 0 && local.argmax < total.argmax)) {
        total.max_ratio = local.max_ratio;
        total.argmax = local.argmax;
      }
      total.rh_max_ratio = std::max(total.rh_max_ratio, local.rh_max_ratio);
    }
  }
  total.sum = sum;
  return total;
}

}  // namespace secmin::kernels::omp
