#include "secmin/arith.hpp"

#include <cmath>
#include <string>

#include "secmin/errors.hpp"

namespace secmin {

BigInt binomial(std::uint64_t n, std::int64_t m) {
  BigInt out;
  if (m < 0 || static_cast<std::uint64_t>(m) > n) return out;
  mpz_bin_uiui(out.get_mpz_t(), n, static_cast<std::uint64_t>(m));
  return out;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for all n < 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

double log_bigint(const BigInt& x) {
  require(sgn(x) > 0, "positive", "log_bigint: argument must be positive");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

DigitExpansion DigitExpansion::of(std::uint64_t value, std::uint64_t base) {
  require(base >= 2, "base >= 2", "digit expansion needs base >= 2");
  DigitExpansion e;
  e.base = base;
  while (value) {
    e.digits.push_back(value % base);
    value /= base;
  }
  return e;
}

std::uint64_t DigitExpansion::value() const {
  std::uint64_t v = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) v = v * base + *it;
  return v;
}

unsigned kummer_valuation(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require(is_prime(p), "p prime", "kummer_valuation: " + std::to_string(p) + " is not prime");
  require(m <= n, "m <= n", "kummer_valuation: m exceeds n");
  std::uint64_t a = m;
  std::uint64_t b = n - m;
  unsigned carries = 0;
  std::uint64_t carry = 0;
  while (a || b || carry) {
    std::uint64_t s = a % p + b % p + carry;
    carry = s >= p ? 1 : 0;
    carries += static_cast<unsigned>(carry);
    a /= p;
    b /= p;
  }
  return carries;
}

bool divides_binomial(std::uint64_t n, std::uint64_t m, std::uint64_t p) {
  require(is_prime(p), "p prime", "divides_binomial: " + std::to_string(p) + " is not prime");
  require(m <= n, "m <= n", "divides_binomial: m exceeds n");
  while (m) {
    if (m % p > n % p) return true;
    m /= p;
    n /= p;
  }
  return false;
}

}  // namespace secmin
