#include "secmin/sieve.hpp"

#include <new>
#include <string>

#include "secmin/errors.hpp"

namespace secmin {

PrimePowerSieve::PrimePowerSieve(std::uint64_t limit) : limit_(limit) {
  require(limit >= 2, "limit >= 2", "build_sieve: limit must be at least 2");
  if (limit > kMaxSieveLimit)
    throw ResourceError("build_sieve: limit " + std::to_string(limit) + " exceeds table capacity");
  try {
    is_prime_.assign(limit + 1, 1);
    lpp_.assign(limit + 1, 0);
    lp_.assign(limit + 1, 0);
  } catch (const std::bad_alloc&) {
    throw ResourceError("build_sieve: out of memory for limit " + std::to_string(limit));
  }

  is_prime_[0] = is_prime_[1] = 0;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (!is_prime_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) is_prime_[j] = 0;
  }

  // Mark every p^k, then carry the running maximum forward in one pass.
  for (std::uint64_t p = 2; p <= limit; ++p) {
    if (!is_prime_[p]) continue;
    for (std::uint64_t q = p;; q *= p) {
      lpp_[q] = static_cast<std::uint32_t>(q);
      if (q > limit / p) break;
    }
  }
  std::uint32_t last_pp = 1, last_p = 0;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (lpp_[n]) last_pp = lpp_[n];
    if (is_prime_[n]) last_p = static_cast<std::uint32_t>(n);
    lpp_[n] = last_pp;
    lp_[n] = last_p;
  }
}

bool PrimePowerSieve::is_prime(std::uint64_t n) const {
  require(n <= limit_, "n <= limit", "sieve query beyond limit");
  return is_prime_[n] != 0;
}

bool PrimePowerSieve::is_prime_power(std::uint64_t n) const {
  require(n <= limit_, "n <= limit", "sieve query beyond limit");
  return n >= 2 && lpp_[n] == n;
}

std::uint64_t PrimePowerSieve::largest_prime_power_leq(std::uint64_t n) const {
  require(n >= 2 && n <= limit_, "2 <= n <= limit",
          "largest_prime_power_leq: n=" + std::to_string(n) + " outside [2, " + std::to_string(limit_) + "]");
  return lpp_[n];
}

std::uint64_t PrimePowerSieve::largest_prime_leq(std::uint64_t n) const {
  require(n >= 2 && n <= limit_, "2 <= n <= limit", "largest_prime_leq: n outside sieve range");
  return lp_[n];
}

}  // namespace secmin
