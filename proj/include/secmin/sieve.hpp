#pragma once

#include <cstdint>
#include <vector>

namespace secmin {

/// Immutable table of primes and "largest prime power <= n" over [1, limit].
/// Prime powers include the primes themselves (p^1). Safe for concurrent reads.
class PrimePowerSieve {
 public:
  /// Throws PreconditionError for limit < 2 and ResourceError when the
  /// tables cannot be allocated.
  explicit PrimePowerSieve(std::uint64_t limit);

  std::uint64_t limit() const noexcept { return limit_; }
  bool is_prime(std::uint64_t n) const;
  bool is_prime_power(std::uint64_t n) const;
  /// Largest p^k <= n; n must be in [2, limit].
  std::uint64_t largest_prime_power_leq(std::uint64_t n) const;
  /// Largest prime <= n; n must be in [2, limit].
  std::uint64_t largest_prime_leq(std::uint64_t n) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint8_t> is_prime_;
  std::vector<std::uint32_t> lpp_;
  std::vector<std::uint32_t> lp_;
};

/// Upper bound on the sieve limit before construction is refused.
inline constexpr std::uint64_t kMaxSieveLimit = 4'000'000'000ULL;

}  // namespace secmin
