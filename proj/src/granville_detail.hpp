#pragma once

#include <cmath>
#include <cstdint>

#include "secmin/granville.hpp"

namespace secmin::detail {

/// One theorem-3 record: brute-force b(n) next to the sieve value c(n).
inline GranvilleRecord theorem3_record(std::uint64_t n, const PrimePowerSieve& sieve) {
  GranvilleRecord r = c_of(n, sieve);
  r.b = b_of(n);
  return r;
}

inline double rh_scale(std::uint64_t j) {
  const double x = static_cast<double>(j);
  return std::sqrt(x) * std::log(x);
}

}  // namespace secmin::detail
