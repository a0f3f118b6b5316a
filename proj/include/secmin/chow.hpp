#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "secmin/arith.hpp"
#include "secmin/exec.hpp"

namespace secmin {

/// Genus g curve, line bundle of degree m, secant index d. The embedding is by
/// L (x) omega, so the ambient projective space has dimension m + g - 2.
struct SecantParams {
  std::uint64_t g = 0;
  std::uint64_t m = 0;
  std::uint64_t d = 0;

  /// Validates m > 2, d >= 1 and 2d <= m + g - 1; throws PreconditionError.
  static SecantParams make(std::uint64_t g, std::uint64_t m, std::uint64_t d);

  std::uint64_t ambient_rank() const { return m + g - 1; }  // N = dim P + 1
  std::uint64_t A() const { return m + g - 1 - d; }
  bool dimension_ok() const { return 2 * d <= m + g - 1; }

  friend bool operator==(const SecantParams&, const SecantParams&) = default;
};

/// Monomials x^i theta^j that survive: i + j <= degree and j <= theta.
struct Truncation {
  std::size_t degree = 0;
  std::size_t theta = 0;

  static Truncation for_params(const SecantParams& p) {
    return {static_cast<std::size_t>(p.d), static_cast<std::size_t>(std::min(p.d, p.g))};
  }
};

/// Element of the truncated ring Q[x, theta] / (monomials outside the
/// truncation), modelling CH*(C_d) with rational coefficients.
class ChowElement {
 public:
  explicit ChowElement(Truncation t);

  static ChowElement unit(Truncation t);
  static ChowElement x(Truncation t);
  static ChowElement theta(Truncation t);

  const Truncation& truncation() const { return trunc_; }
  /// Zero for monomials outside the truncation.
  Rational coeff(std::size_t i, std::size_t j) const;
  /// Ignored (stays zero) outside the truncation.
  void set(std::size_t i, std::size_t j, const Rational& v);
  bool is_zero() const;
  /// Re-truncate to a smaller or equal truncation.
  ChowElement truncated(Truncation t) const;

  ChowElement& operator+=(const ChowElement& o);
  ChowElement& operator-=(const ChowElement& o);
  ChowElement& operator*=(const Rational& s);
  friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
  friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
  friend ChowElement operator*(ChowElement a, const Rational& s) { return a *= s; }
  friend ChowElement operator*(const ChowElement& a, const ChowElement& b);
  friend bool operator==(const ChowElement& a, const ChowElement& b);

 private:
  bool inside(std::size_t i, std::size_t j) const { return j <= trunc_.theta && i + j <= trunc_.degree; }
  std::size_t index(std::size_t i, std::size_t j) const { return i * (trunc_.theta + 1) + j; }

  Truncation trunc_;
  std::vector<Rational> coeffs_;
};

/// Power series in t with ChowElement coefficients, truncated after t^order.
class ChowSeries {
 public:
  ChowSeries(std::size_t order, Truncation t);

  static ChowSeries unit(std::size_t order, Truncation t);

  std::size_t order() const { return terms_.size() - 1; }
  const Truncation& truncation() const { return trunc_; }
  const ChowElement& operator[](std::size_t k) const { return terms_.at(k); }
  ChowElement& operator[](std::size_t k) { return terms_.at(k); }

  friend ChowSeries operator*(const ChowSeries& a, const ChowSeries& b);
  friend bool operator==(const ChowSeries& a, const ChowSeries& b);

 private:
  Truncation trunc_;
  std::vector<ChowElement> terms_;
};

/// sum_{alpha=0}^{min(d,g)} C(m+g-1-d-alpha, d-alpha) C(g, alpha).
BigInt degree_closed_form(const SecantParams& p);

/// (1 + xt)^{-A} exp(-t theta / (1 + xt)) expanded exactly.
ChowSeries chern_series(const SecantParams& p);
/// Same series under a wider truncation (degree >= d, theta >= min(d, g)).
ChowSeries chern_series(const SecantParams& p, Truncation t);

/// Truncated multiplicative inverse. Throws PreconditionError unless the
/// constant term is the ring unit.
ChowSeries segre_series(const ChowSeries& c);

/// Degree map on C_d: x^{d-j} theta^j -> j! C(g, j); other monomials map to 0.
Rational pushforward_degree(const ChowElement& e, const SecantParams& p);

/// Top Segre class pushed forward. Throws TheoremViolation if the result is
/// not a nonnegative integer.
BigInt degree_oracle(const SecantParams& p);

/// C(A, i): coefficient of x^i in (1 + xt)^A.
BigInt restricted_segre(std::uint64_t A, std::uint64_t i);

/// D(g, m, d) for use inside bounds; D(g, m, 0) = 1. Requires m > 2 and
/// 2d <= m + g - 1 when d >= 1.
BigInt secant_degree(std::uint64_t g, std::uint64_t m, std::uint64_t d);

struct SecantSweepEntry {
  SecantParams params;
  BigInt closed;
  BigInt oracle;
};

/// Both degrees for every admissible (g, m, d) with g <= g_max, 1 <= d <= d_max,
/// 3 <= m <= m_max, in (g, d, m) lexicographic order.
std::vector<SecantSweepEntry> secant_sweep(std::uint64_t g_max, std::uint64_t d_max,
                                           std::uint64_t m_max, Exec exec = Exec::parallel);

namespace kernels {
namespace serial {
std::vector<SecantSweepEntry> secant_sweep(const std::vector<SecantParams>& grid);
}
namespace omp {
std::vector<SecantSweepEntry> secant_sweep(const std::vector<SecantParams>& grid);
}
}  // namespace kernels

}  // namespace secmin
