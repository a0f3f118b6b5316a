#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "secmin/lattice.hpp"

namespace secmin::detail {

/// Gram = R^T R; norm(x) = sum_i q[i] (x_i + sum_{j>i} mu[i][j] x_j)^2.
struct Cholesky {
  std::size_t n = 0;
  std::vector<double> q;
  std::vector<double> mu;  // row-major, upper part used
  double at(std::size_t i, std::size_t j) const { return mu[i * n + j]; }
};

inline Cholesky cholesky(const GramLattice& l) {
  const std::size_t n = l.rank();
  std::vector<double> r(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double s = static_cast<double>(l(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= r[k * n + i] * r[k * n + i];
    r[i * n + i] = std::sqrt(s);
    for (std::size_t j = i + 1; j < n; ++j) {
      double t = static_cast<double>(l(i, j));
      for (std::size_t k = 0; k < i; ++k) t -= r[k * n + i] * r[k * n + j];
      r[i * n + j] = t / r[i * n + i];
    }
  }
  Cholesky c;
  c.n = n;
  c.q.resize(n);
  c.mu.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    c.q[i] = r[i * n + i] * r[i * n + i];
    for (std::size_t j = i + 1; j < n; ++j) c.mu[i * n + j] = r[i * n + j] / r[i * n + i];
  }
  return c;
}

/// Floating radius with slack so that boundary vectors are never lost; the
/// exact integer norm filters afterwards.
inline double padded_radius(std::int64_t radius_sq) {
  return static_cast<double>(radius_sq) * (1.0 + 1e-9) + 1e-6;
}

inline std::int64_t top_bound(const Cholesky& c, std::int64_t radius_sq) {
  return static_cast<std::int64_t>(std::floor(std::sqrt(padded_radius(radius_sq) / c.q[c.n - 1]) + 1e-9));
}

inline bool canonical_sign(const IntVec& v) {
  for (auto x : v)
    if (x != 0) return x > 0;
  return false;  // zero vector
}

/// Exact v^T G v, or -1 when it exceeds the int64 range.
inline std::int64_t exact_norm(const GramLattice& l, const IntVec& v) {
  __int128 s = 0;
  const std::size_t n = l.rank();
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    __int128 row = 0;
    for (std::size_t j = 0; j < n; ++j) row += static_cast<__int128>(l(i, j)) * v[j];
    s += row * v[i];
  }
  if (s > static_cast<__int128>(INT64_MAX)) return -1;
  return static_cast<std::int64_t>(s);
}

/// Visits every canonical nonzero x with x[n-1] == top and exact norm <= radius_sq.
template <class Sink>
void enumerate_with_top(const GramLattice& l, const Cholesky& c, std::int64_t radius_sq, std::int64_t top,
                        Sink&& sink) {
  const std::size_t n = c.n;
  const double bound = padded_radius(radius_sq);
  IntVec x(n, 0);
  x[n - 1] = top;
  const double first = c.q[n - 1] * static_cast<double>(top) * static_cast<double>(top);
  if (first > bound) return;

  // Iterative depth-first walk over levels n-2 .. 0.
  std::vector<double> partial(n + 1, 0.0);
  std::vector<std::int64_t> hi(n, 0);
  partial[n - 1] = first;
  auto center = [&](std::size_t i) {
    double s = 0;
    for (std::size_t j = i + 1; j < n; ++j) s -= c.at(i, j) * static_cast<double>(x[j]);
    return s;
  };
  auto emit = [&] {
    if (!canonical_sign(x)) return;
    const std::int64_t nn = exact_norm(l, x);
    if (nn >= 0 && nn <= radius_sq) sink(x, nn);
  };
  if (n == 1) {
    emit();
    return;
  }
  std::size_t i = n - 2;
  auto open_level = [&](std::size_t lvl) -> bool {
    const double rem = bound - partial[lvl + 1];
    if (rem < 0) return false;
    const double ctr = center(lvl);
    const double w = std::sqrt(rem / c.q[lvl]);
    x[lvl] = static_cast<std::int64_t>(std::ceil(ctr - w - 1e-9));
    hi[lvl] = static_cast<std::int64_t>(std::floor(ctr + w + 1e-9));
    return x[lvl] <= hi[lvl];
  };
  bool ok = open_level(i);
  while (true) {
    if (ok && x[i] <= hi[i]) {
      const double ctr = center(i);
      const double t = static_cast<double>(x[i]) - ctr;
      partial[i] = partial[i + 1] + c.q[i] * t * t;
      if (i == 0) {
        emit();
        ++x[0];
        continue;
      }
      --i;
      ok = open_level(i);
      continue;
    }
    // level exhausted: go up
    ++i;
    if (i >= n - 1) return;
    ++x[i];
    ok = true;
  }
}

inline void sort_short_vectors(std::vector<ShortVector>& v) {
  std::sort(v.begin(), v.end(), [](const ShortVector& a, const ShortVector& b) {
    if (a.norm_sq != b.norm_sq) return a.norm_sq < b.norm_sq;
    return a.coords < b.coords;
  });
}

}  // namespace secmin::detail
