#include "secmin/granville.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "granville_detail.hpp"
#include "secmin/errors.hpp"

namespace secmin {

BandGcdResult band_gcd(std::uint64_t n, std::uint64_t b) {
  require(n >= 2, "n >= 2", "band_gcd: n must be at least 2");
  BandGcdResult r;
  r.n = n;
  r.band_lo = static_cast<std::int64_t>(b);
  r.band_hi = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(b);
  if (2 * b + 2 > n) {
    r.empty = true;
    return r;
  }
  // C(n, m) = C(n, n - m): the lower half of the band carries every value.
  const std::uint64_t hi = std::min(n / 2, n - b - 1);
  BigInt c = binomial(n, static_cast<std::int64_t>(b + 1));
  r.gcd = c;
  for (std::uint64_t m = b + 2; m <= hi && r.gcd != 1; ++m) {
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), n - m + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), m);
    mpz_gcd(r.gcd.get_mpz_t(), r.gcd.get_mpz_t(), c.get_mpz_t());
  }
  return r;
}

std::uint64_t b_of(std::uint64_t n) {
  require(n >= 2, "n >= 2", "b_of: n must be at least 2");
  const std::uint64_t half = n / 2;
  std::vector<BigInt> row(half + 1);
  row[0] = 1;
  for (std::uint64_t m = 1; m <= half; ++m) {
    mpz_mul_ui(row[m].get_mpz_t(), row[m - 1].get_mpz_t(), n - m + 1);
    mpz_divexact_ui(row[m].get_mpz_t(), row[m].get_mpz_t(), m);
  }
  BigInt g;
  for (std::uint64_t b = 0;; ++b) {
    if (2 * b + 2 > n) return b;  // empty band: no constraint
    const std::uint64_t hi = std::min(half, n - b - 1);
    g = row[b + 1];
    for (std::uint64_t m = b + 2; m <= hi && g != 1; ++m)
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[m].get_mpz_t());
    if (g != 1) return b;
  }
}

GranvilleRecord c_of(std::uint64_t n, const PrimePowerSieve& sieve) {
  require(n >= 2 && n <= sieve.limit(), "2 <= n <= sieve.limit",
          "c_of: n=" + std::to_string(n) + " outside sieve range [2, " + std::to_string(sieve.limit()) + "]");
  GranvilleRecord r;
  r.n = n;
  r.witness_prime_power = sieve.largest_prime_power_leq(n);
  r.c = n - r.witness_prime_power;
  return r;
}

std::uint64_t b_p(std::uint64_t n, std::uint64_t p) {
  require(n >= 2, "n >= 2", "b_p: n must be at least 2");
  require(is_prime(p), "p prime", "b_p: " + std::to_string(p) + " is not prime");
  require(p <= n, "p <= n", "b_p: p exceeds n");
  // Largest m <= n/2 whose base-p digits are all <= those of n (Kummer).
  const auto nd = DigitExpansion::of(n, p);
  const auto hd = DigitExpansion::of(n / 2, p);
  std::uint64_t m = 0;
  bool tight = true;
  for (std::size_t i = nd.digits.size(); i-- > 0;) {
    std::uint64_t digit = nd.at(i);
    if (tight) {
      if (hd.at(i) <= digit) {
        digit = hd.at(i);
      } else {
        tight = false;
      }
    }
    m = m * p + digit;
  }
  return m;
}

std::uint64_t b_via_primes(std::uint64_t n) {
  require(n >= 2, "n >= 2", "b_via_primes: n must be at least 2");
  std::uint64_t best = n / 2;
  for (std::uint64_t p = 2; p <= n && best > 0; ++p)
    if (is_prime(p)) best = std::min(best, b_p(n, p));
  return best;
}

std::vector<GranvilleRecord> verify_theorem3(std::uint64_t range_hi, Exec exec) {
  require(range_hi >= 2, "range_hi >= 2", "verify_theorem3: range_hi must be at least 2");
  const PrimePowerSieve sieve(range_hi);
  auto records = exec == Exec::parallel ? kernels::omp::theorem3_records(2, range_hi, sieve)
                                        : kernels::serial::theorem3_records(2, range_hi, sieve);
  for (const auto& r : records) {
    if (*r.b != r.c)
      throw TheoremViolation("theorem 3 counterexample at n=" + std::to_string(r.n) + ": b=" +
                             std::to_string(*r.b) + " c=" + std::to_string(r.c));
  }
  return records;
}

bool verify_quarter_bound(std::uint64_t range_hi, const PrimePowerSieve& sieve, Exec exec) {
  require(range_hi >= 30, "range_hi >= 30", "verify_quarter_bound: range_hi must be at least 30");
  require(range_hi <= sieve.limit(), "sieve covers range", "verify_quarter_bound: sieve too small");
  auto bad = exec == Exec::parallel ? kernels::omp::quarter_bound_violation(30, range_hi, sieve)
                                    : kernels::serial::quarter_bound_violation(30, range_hi, sieve);
  return !bad.has_value();
}

std::vector<std::uint64_t> upper_quarter_prime_gaps(std::uint64_t lo, std::uint64_t hi,
                                                    const PrimePowerSieve& sieve) {
  require(lo >= 2 && lo <= hi, "2 <= lo <= hi", "upper_quarter_prime_gaps: need 2 <= lo <= hi");
  require(hi <= sieve.limit(), "sieve covers range", "upper_quarter_prime_gaps: sieve too small");
  std::vector<std::uint64_t> gaps;
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (4 * sieve.largest_prime_leq(n) < 3 * n) gaps.push_back(n);
  return gaps;
}

SumEstimateReport asymptotic_report(std::uint64_t range_hi, double exponent,
                                    const PrimePowerSieve& sieve, Exec exec) {
  require(range_hi >= 2, "range_hi >= 2", "asymptotic_report: range_hi must be at least 2");
  require(range_hi <= sieve.limit(), "sieve covers range", "asymptotic_report: sieve too small");
  const auto s = exec == Exec::parallel ? kernels::omp::c_sum_stats(range_hi, exponent, sieve)
                                        : kernels::serial::c_sum_stats(range_hi, exponent, sieve);
  SumEstimateReport r;
  r.n = range_hi;
  r.partial_sum = s.sum;
  r.exponent = exponent;
  const double x = static_cast<double>(range_hi);
  r.ratio = static_cast<double>(s.sum) / std::pow(x, exponent);
  r.max_ratio = s.max_ratio;
  r.argmax = s.argmax;
  r.rh_max_ratio = s.rh_max_ratio;
  const double lx = std::log(x);
  r.rh_sum_ratio = static_cast<double>(s.sum) / (x * lx * lx * lx);
  return r;
}

SumEstimateReport asymptotic_report(std::uint64_t range_hi, double exponent) {
  const PrimePowerSieve sieve(std::max<std::uint64_t>(range_hi, 2));
  return asymptotic_report(range_hi, exponent, sieve);
}

BigInt coprimality_band(std::uint64_t A, std::uint64_t lo, std::uint64_t hi) {
  require(lo <= hi && hi <= A, "lo <= hi <= A", "coprimality_band: need lo <= hi <= A");
  BigInt c = binomial(A, static_cast<std::int64_t>(lo));
  BigInt g = c;
  for (std::uint64_t b = lo + 1; b <= hi && g != 1; ++b) {
    mpz_mul_ui(c.get_mpz_t(), c.get_mpz_t(), A - b + 1);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), b);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

ExcessDimensionBound excess_dimension_bound(std::uint64_t g, std::uint64_t m, std::uint64_t d) {
  require(d >= 1 && m >= 1, "m, d positive", "excess_dimension_bound: m and d must be positive");
  require(m > 2 * d, "m > 2d", "excess_dimension_bound: requires m > 2d");
  ExcessDimensionBound r;
  r.A = m + g - 1 - d;
  r.slack = m + 2 * g - 1 - 2 * d;
  r.b_A = r.A >= 2 ? b_via_primes(r.A) : 0;
  r.hypothesis_holds = r.b_A <= r.slack;
  if (r.hypothesis_holds && r.b_A > 0) r.max_excess = r.b_A - 1;
  return r;
}

namespace kernels::serial {

std::vector<GranvilleRecord> theorem3_records(std::uint64_t lo, std::uint64_t hi,
                                              const PrimePowerSieve& sieve) {
  std::vector<GranvilleRecord> out;
  for (std::uint64_t n = lo; n <= hi; ++n) out.push_back(detail::theorem3_record(n, sieve));
  return out;
}

std::optional<std::uint64_t> quarter_bound_violation(std::uint64_t lo, std::uint64_t hi,
                                                     const PrimePowerSieve& sieve) {
  for (std::uint64_t n = lo; n <= hi; ++n)
    if (4 * (n - sieve.largest_prime_power_leq(n)) > n) return n;
  return std::nullopt;
}

CSumStats c_sum_stats(std::uint64_t hi, double exponent, const PrimePowerSieve& sieve) {
  CSumStats s;
  s.argmax = 2;
  for (std::uint64_t j = 2; j <= hi; ++j) {
    const std::uint64_t c = j - sieve.largest_prime_power_leq(j);
    s.sum += c;
    const double ratio = static_cast<double>(c) / std::pow(static_cast<double>(j), exponent);
    if (ratio > s.max_ratio) {
      s.max_ratio = ratio;
      s.argmax = j;
    }
    if (j >= 3) s.rh_max_ratio = std::max(s.rh_max_ratio, static_cast<double>(c) / detail::rh_scale(j));
  }
  return s;
}

}  // namespace kernels::serial

}  // namespace secmin
