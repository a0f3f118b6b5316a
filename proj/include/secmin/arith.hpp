#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace secmin {

using BigInt = mpz_class;
/// Exact rational, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;

/// C(n, m); zero when m < 0 or m > n.
BigInt binomial(std::uint64_t n, std::int64_t m);

/// Deterministic primality for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Natural log of a positive big integer, accurate to double precision
/// regardless of its size.
double log_bigint(const BigInt& x);

/// Base-p digits of a nonnegative integer, least significant first.
/// Zero has an empty digit list.
struct DigitExpansion {
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  static DigitExpansion of(std::uint64_t value, std::uint64_t base);
  std::uint64_t value() const;
  /// Digit at position i, zero past the most significant digit.
  std::uint64_t at(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
  /// Most significant digit (zero for the value 0).
  std::uint64_t leading() const { return digits.empty() ? 0 : digits.back(); }
};

/// v_p(C(n, m)) as the number of carries when adding m and n - m in base p.
/// Throws PreconditionError when p is not prime or m > n.
unsigned kummer_valuation(std::uint64_t n, std::uint64_t m, std::uint64_t p);

/// True iff p | C(n, m), i.e. some base-p digit of m exceeds the matching
/// digit of n.
bool divides_binomial(std::uint64_t n, std::uint64_t m, std::uint64_t p);

}  // namespace secmin
