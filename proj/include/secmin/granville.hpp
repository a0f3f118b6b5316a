#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "secmin/arith.hpp"
#include "secmin/exec.hpp"
#include "secmin/sieve.hpp"

namespace secmin {

/// GCD of the band {C(n, m) : band_lo < m < band_hi}.
struct BandGcdResult {
  std::uint64_t n = 0;
  std::int64_t band_lo = 0;
  std::int64_t band_hi = 0;
  BigInt gcd;          // 0 for an empty band
  bool empty = false;
};

struct GranvilleRecord {
  std::uint64_t n = 0;
  std::optional<std::uint64_t> b;  // brute-force b(n), when computed
  std::uint64_t c = 0;             // n - witness_prime_power
  std::uint64_t witness_prime_power = 0;
};

struct SumEstimateReport {
  std::uint64_t n = 0;
  std::uint64_t partial_sum = 0;  // sum_{j=2}^{n} c(j)
  double exponent = 0;
  double ratio = 0;               // partial_sum / n^exponent
  double max_ratio = 0;           // max_{2<=j<=n} c(j) / j^exponent
  std::uint64_t argmax = 0;
  // Conditional (Riemann hypothesis) scalings, reported only.
  double rh_max_ratio = 0;        // max_{j>=3} c(j) / (sqrt(j) log j)
  double rh_sum_ratio = 0;        // partial_sum / (n log^3 n)
};

/// Maximal excess of a linear subspace of the secant variety over d - 1,
/// derived from b(m+g-1-d).
struct ExcessDimensionBound {
  std::uint64_t A = 0;              // m + g - 1 - d
  std::uint64_t slack = 0;          // m + 2g - 1 - 2d
  std::uint64_t b_A = 0;
  bool hypothesis_holds = false;    // b(A) <= slack
  std::optional<std::uint64_t> max_excess;  // b(A) - 1; absent when b(A) = 0 or hypothesis fails
};

BandGcdResult band_gcd(std::uint64_t n, std::uint64_t b);

/// Smallest b such that all C(n, m), b < m < n - b, share a factor; computed
/// directly from big binomials by an ascending scan.
std::uint64_t b_of(std::uint64_t n);

GranvilleRecord c_of(std::uint64_t n, const PrimePowerSieve& sieve);

/// Largest b <= n/2 with p not dividing C(n, b), from base-p digits only.
std::uint64_t b_p(std::uint64_t n, std::uint64_t p);

/// min over primes p <= n of b_p(n, p). Equals b(n); no big integers.
std::uint64_t b_via_primes(std::uint64_t n);

/// Checks b_of(n) == c(n) for 2 <= n <= range_hi. Throws TheoremViolation on
/// a counterexample.
std::vector<GranvilleRecord> verify_theorem3(std::uint64_t range_hi, Exec exec = Exec::parallel);

/// True iff 4 c(n) <= n for all 30 <= n <= range_hi.
bool verify_quarter_bound(std::uint64_t range_hi, const PrimePowerSieve& sieve,
                          Exec exec = Exec::parallel);

/// Every n in [lo, hi] with no prime p satisfying 3n/4 <= p <= n.
std::vector<std::uint64_t> upper_quarter_prime_gaps(std::uint64_t lo, std::uint64_t hi,
                                                    const PrimePowerSieve& sieve);

SumEstimateReport asymptotic_report(std::uint64_t range_hi, double exponent,
                                    const PrimePowerSieve& sieve, Exec exec = Exec::parallel);
SumEstimateReport asymptotic_report(std::uint64_t range_hi, double exponent);

/// GCD of {C(A, b) : lo <= b <= hi}.
BigInt coprimality_band(std::uint64_t A, std::uint64_t lo, std::uint64_t hi);

/// Requires m > 2d.
ExcessDimensionBound excess_dimension_bound(std::uint64_t g, std::uint64_t m, std::uint64_t d);

namespace kernels {

struct CSumStats {
  std::uint64_t sum = 0;
  double max_ratio = 0;
  std::uint64_t argmax = 0;
  double rh_max_ratio = 0;
};

namespace serial {
std::vector<GranvilleRecord> theorem3_records(std::uint64_t lo, std::uint64_t hi,
                                              const PrimePowerSieve& sieve);
std::optional<std::uint64_t> quarter_bound_violation(std::uint64_t lo, std::uint64_t hi,
                                                     const PrimePowerSieve& sieve);
CSumStats c_sum_stats(std::uint64_t hi, double exponent, const PrimePowerSieve& sieve);
}  // namespace serial

namespace omp {
std::vector<GranvilleRecord> theorem3_records(std::uint64_t lo, std::uint64_t hi,
                                              const PrimePowerSieve& sieve);
std::optional<std::uint64_t> quarter_bound_violation(std::uint64_t lo, std::uint64_t hi,
                                                     const PrimePowerSieve& sieve);
CSumStats c_sum_stats(std::uint64_t hi, double exponent, const PrimePowerSieve& sieve);
}  // namespace omp

}  // namespace kernels

}  // namespace secmin
