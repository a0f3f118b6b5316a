#include <doctest.h>

#include <cmath>

#include "secmin/errors.hpp"
#include "secmin/granville.hpp"

using namespace secmin;

namespace {

BigInt brute_band_gcd(std::uint64_t n, std::uint64_t b) {
  BigInt g = 0;
  for (std::uint64_t m = b + 1; m + b < n; ++m) {
    const BigInt c = binomial(n, static_cast<std::int64_t>(m));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  return g;
}

// Largest b <= n/2 with p not dividing C(n, b), from the big binomial.
std::uint64_t brute_b_p(std::uint64_t n, std::uint64_t p) {
  for (std::uint64_t b = n / 2;; --b)
    if (binomial(n, static_cast<std::int64_t>(b)) % static_cast<unsigned long>(p) != 0) return b;
}

std::uint64_t brute_b(std::uint64_t n) {
  for (std::uint64_t b = 0;; ++b) {
    const BigInt g = brute_band_gcd(n, b);
    if (g != 1) return b;
  }
}

bool prime_power(std::uint64_t q) {
  if (q < 2) return false;
  std::uint64_t p = 2;
  while (q % p) ++p;
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

TEST_CASE("band_gcd examples") {
  CHECK(band_gcd(6, 0).gcd == 1);
  CHECK(band_gcd(6, 1).gcd == 5);
  CHECK(band_gcd(16, 0).gcd % 2 == 0);
  CHECK(band_gcd(27, 0).gcd % 3 == 0);
  const auto e = band_gcd(6, 3);
  CHECK(e.empty);
  CHECK(e.gcd == 0);
}

TEST_CASE("band_gcd equals brute-force gcd") {
  for (std::uint64_t n = 2; n <= 120; ++n)
    for (std::uint64_t b = 0; b <= n / 2; ++b) REQUIRE(band_gcd(n, b).gcd == brute_band_gcd(n, b));
}

TEST_CASE("b_of examples") {
  CHECK(b_of(8) == 0);
  CHECK(b_of(6) == 1);
  CHECK(b_of(10) == 1);
  CHECK(b_of(2) == 0);
  CHECK(b_of(3) == 0);
  for (std::uint64_t n = 2; n <= 150; ++n) REQUIRE(b_of(n) == brute_b(n));
}

TEST_CASE("c_of examples") {
  const PrimePowerSieve s(100);
  auto r = c_of(10, s);
  CHECK(r.c == 1);
  CHECK(r.witness_prime_power == 9);
  r = c_of(7, s);
  CHECK(r.c == 0);
  CHECK(r.witness_prime_power == 7);
  r = c_of(30, s);
  CHECK(r.c == 1);
  CHECK(r.witness_prime_power == 29);
  CHECK_THROWS_AS(c_of(101, s), PreconditionError);
}

TEST_CASE("b_p examples and brute-force agreement") {
  // n = p^k + r with leading digit 1: b_p = n - p^k.
  CHECK(b_p(10, 3) == 1);
  CHECK(b_p(33, 5) == 8);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) CHECK(b_p(2 * p, p) == p);
  CHECK_THROWS_AS(b_p(5, 7), PreconditionError);
  for (std::uint64_t n = 2; n <= 300; ++n)
    for (std::uint64_t p = 2; p <= n; ++p)
      if (is_prime(p)) REQUIRE(b_p(n, p) == brute_b_p(n, p));
}

TEST_CASE("b(n) = min_p b_p for n <= 500") {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    std::uint64_t best = n;
    for (std::uint64_t p = 2; p <= n; ++p)
      if (is_prime(p)) best = std::min(best, b_p(n, p));
    REQUIRE(b_of(n) == best);
    REQUIRE(b_via_primes(n) == best);
  }
}

TEST_CASE("eq (3): leading digit >= 2 gives b_p > n/4") {
  for (std::uint64_t n = 8; n <= 1000; ++n)
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!is_prime(p)) continue;
      if (DigitExpansion::of(n, p).leading() < 2) continue;
      REQUIRE(4 * b_p(n, p) > n);
    }
}

TEST_CASE("eq (4) for n <= 2000") {
  for (std::uint64_t n = 2; n <= 2000; ++n)
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!is_prime(p) || DigitExpansion::of(n, p).leading() != 1) continue;
      std::uint64_t pk = 1;
      while (pk * p <= n) pk *= p;
      REQUIRE(b_p(n, p) == n - pk);
    }
}

TEST_CASE("theorem 3 records") {
  auto recs = verify_theorem3(100, Exec::serial);
  CHECK(recs.size() == 99);
  for (const auto& r : recs) REQUIRE(*r.b == r.c);
  recs = verify_theorem3(2, Exec::serial);
  REQUIRE(recs.size() == 1);
  CHECK(*recs[0].b == 0);
  // small range: c(n) <= n/4 from n = 8 on
  recs = verify_theorem3(30, Exec::serial);
  for (const auto& r : recs)
    if (r.n >= 8) CHECK(4 * r.c <= r.n);
  CHECK_THROWS_AS(verify_theorem3(1), PreconditionError);
}

TEST_CASE("theorem 3 for n <= 3000, prime powers vanish") {
  const auto recs = verify_theorem3(3000);
  REQUIRE(recs.size() == 2999);
  for (const auto& r : recs) {
    REQUIRE(*r.b == r.c);
    if (prime_power(r.n)) REQUIRE(r.c == 0);
  }
}

TEST_CASE("minimality of b(n) through band gcds") {
  for (std::uint64_t n = 2; n <= 400; ++n) {
    const auto b = b_of(n);
    const auto g = band_gcd(n, b);
    REQUIRE((g.empty || g.gcd > 1));
    if (b >= 1) REQUIRE(band_gcd(n, b - 1).gcd == 1);
  }
}

TEST_CASE("quarter bound and the prime in [3n/4, n]") {
  const PrimePowerSieve s(1'000'000);
  CHECK(verify_quarter_bound(30, s));
  CHECK(verify_quarter_bound(1'000'000, s));
  CHECK(verify_quarter_bound(1'000'000, s, Exec::serial));
  CHECK(c_of(32, s).c == 0);
  // A prime in [3n/4, n] exists for every 2 <= n <= 10^6 except n = 10.
  CHECK(upper_quarter_prime_gaps(2, 1'000'000, s) == std::vector<std::uint64_t>{10});
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    bool found = false;
    for (std::uint64_t p = n; 4 * p >= 3 * n && !found; --p) found = is_prime(p);
    REQUIRE(found == (n != 10));
  }
  CHECK(upper_quarter_prime_gaps(11, 1'000'000, s).empty());
  CHECK_THROWS_AS(verify_quarter_bound(29, s), PreconditionError);
}

TEST_CASE("asymptotic report") {
  const auto r = asymptotic_report(100, 1.0);
  std::uint64_t sum = 0;
  double mx = 0;
  const PrimePowerSieve s(100);
  for (std::uint64_t j = 2; j <= 100; ++j) {
    const auto c = c_of(j, s).c;
    sum += c;
    mx = std::max(mx, static_cast<double>(c) / static_cast<double>(j));
  }
  CHECK(r.partial_sum == sum);
  CHECK(r.ratio == doctest::Approx(static_cast<double>(sum) / 100));
  CHECK(r.max_ratio == doctest::Approx(mx));
  CHECK(r.max_ratio <= 0.25);
  const auto big = asymptotic_report(1'000'000, 0.535);
  CHECK(std::isfinite(big.ratio));
  CHECK(std::isfinite(big.max_ratio));
  const auto b7 = asymptotic_report(1'000'000, 23.0 / 18.0);
  CHECK(std::isfinite(b7.ratio));
  CHECK(b7.partial_sum == big.partial_sum);
}

TEST_CASE("coprimality band") {
  CHECK(coprimality_band(9, 0, 5) == 1);
  CHECK(coprimality_band(6, 1, 2) == 3);
  CHECK(coprimality_band(16, 3, 3) == 560);
  // The band of Prop 3 is coprime exactly beyond b(A).
  for (std::uint64_t A = 2; A <= 200; ++A) {
    const auto b = b_of(A);
    if (b + 1 < A - b) CHECK(coprimality_band(A, b + 1, A - b - 1) == band_gcd(A, b).gcd);
  }
  CHECK_THROWS_AS(coprimality_band(5, 3, 2), PreconditionError);
  CHECK_THROWS_AS(coprimality_band(5, 3, 6), PreconditionError);
}

TEST_CASE("excess dimension bound") {
  const auto r = excess_dimension_bound(2, 20, 5);
  CHECK(r.A == 16);
  CHECK(r.b_A == 0);
  CHECK(r.slack == 13);
  CHECK(r.hypothesis_holds);
  CHECK_FALSE(r.max_excess.has_value());
  const auto s = excess_dimension_bound(0, 20, 3);  // A = 16
  CHECK_FALSE(s.max_excess.has_value());
  const auto t = excess_dimension_bound(3, 20, 4);  // A = 18, b(18) = 1
  CHECK(t.b_A == 1);
  CHECK(t.hypothesis_holds);
  REQUIRE(t.max_excess.has_value());
  CHECK(*t.max_excess == 0);
  CHECK_THROWS_AS(excess_dimension_bound(2, 10, 5), PreconditionError);
}
