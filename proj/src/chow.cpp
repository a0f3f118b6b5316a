#include "secmin/chow.hpp"

#include <string>

#include "secmin/errors.hpp"

namespace secmin {

SecantParams SecantParams::make(std::uint64_t g, std::uint64_t m, std::uint64_t d) {
  require(m > 2, "m > 2", "secant: deg(L) = m must exceed 2");
  require(d >= 1, "d >= 1", "secant: d must be positive");
  SecantParams p{g, m, d};
  require(p.dimension_ok(), "2d <= m+g-1",
          "secant: 2d=" + std::to_string(2 * d) + " exceeds m+g-1=" + std::to_string(m + g - 1));
  return p;
}

// ---------------------------------------------------------------------------
// ChowElement

ChowElement::ChowElement(Truncation t) : trunc_(t), coeffs_((t.degree + 1) * (t.theta + 1)) {}

ChowElement ChowElement::unit(Truncation t) {
  ChowElement e(t);
  e.set(0, 0, 1);
  return e;
}

ChowElement ChowElement::x(Truncation t) {
  ChowElement e(t);
  e.set(1, 0, 1);
  return e;
}

ChowElement ChowElement::theta(Truncation t) {
  ChowElement e(t);
  e.set(0, 1, 1);
  return e;
}

Rational ChowElement::coeff(std::size_t i, std::size_t j) const {
  return inside(i, j) ? coeffs_[index(i, j)] : Rational(0);
}

void ChowElement::set(std::size_t i, std::size_t j, const Rational& v) {
  if (inside(i, j)) coeffs_[index(i, j)] = v;
}

bool ChowElement::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

ChowElement ChowElement::truncated(Truncation t) const {
  ChowElement out(t);
  for (std::size_t i = 0; i <= t.degree; ++i)
    for (std::size_t j = 0; j <= t.theta && i + j <= t.degree; ++j) out.set(i, j, coeff(i, j));
  return out;
}

ChowElement& ChowElement::operator+=(const ChowElement& o) {
  require(trunc_.degree == o.trunc_.degree && trunc_.theta == o.trunc_.theta, "same truncation",
          "ChowElement: truncation mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& o) {
  require(trunc_.degree == o.trunc_.degree && trunc_.theta == o.trunc_.theta, "same truncation",
          "ChowElement: truncation mismatch");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

ChowElement& ChowElement::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ChowElement operator*(const ChowElement& a, const ChowElement& b) {
  require(a.trunc_.degree == b.trunc_.degree && a.trunc_.theta == b.trunc_.theta, "same truncation",
          "ChowElement: truncation mismatch");
  const Truncation t = a.trunc_;
  ChowElement out(t);
  for (std::size_t i1 = 0; i1 <= t.degree; ++i1) {
    for (std::size_t j1 = 0; j1 <= t.theta && i1 + j1 <= t.degree; ++j1) {
      const Rational& ca = a.coeffs_[a.index(i1, j1)];
      if (ca == 0) continue;
      for (std::size_t i2 = 0; i1 + j1 + i2 <= t.degree; ++i2) {
        for (std::size_t j2 = 0; j1 + j2 <= t.theta && i1 + j1 + i2 + j2 <= t.degree; ++j2) {
          const Rational& cb = b.coeffs_[b.index(i2, j2)];
          if (cb == 0) continue;
          out.coeffs_[out.index(i1 + i2, j1 + j2)] += ca * cb;
        }
      }
    }
  }
  return out;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
  return a.trunc_.degree == b.trunc_.degree && a.trunc_.theta == b.trunc_.theta && a.coeffs_ == b.coeffs_;
}

// ---------------------------------------------------------------------------
// ChowSeries

ChowSeries::ChowSeries(std::size_t order, Truncation t) : trunc_(t), terms_(order + 1, ChowElement(t)) {}

ChowSeries ChowSeries::unit(std::size_t order, Truncation t) {
  ChowSeries s(order, t);
  s[0] = ChowElement::unit(t);
  return s;
}

ChowSeries operator*(const ChowSeries& a, const ChowSeries& b) {
  require(a.order() == b.order(), "same order", "ChowSeries: order mismatch");
  ChowSeries out(a.order(), a.trunc_);
  for (std::size_t k = 0; k <= a.order(); ++k) {
    if (a[k].is_zero()) continue;
    for (std::size_t l = 0; k + l <= a.order(); ++l) out[k + l] += a[k] * b[l];
  }
  return out;
}

bool operator==(const ChowSeries& a, const ChowSeries& b) { return a.terms_ == b.terms_; }

// ---------------------------------------------------------------------------
// Degrees

BigInt degree_closed_form(const SecantParams& p) {
  const auto q = SecantParams::make(p.g, p.m, p.d);
  BigInt total = 0;
  const std::uint64_t top = std::min(q.d, q.g);
  for (std::uint64_t a = 0; a <= top; ++a)
    total += binomial(q.A() - a, static_cast<std::int64_t>(q.d - a)) * binomial(q.g, static_cast<std::int64_t>(a));
  return total;
}

ChowSeries chern_series(const SecantParams& p) { return chern_series(p, Truncation::for_params(p)); }

ChowSeries chern_series(const SecantParams& p, Truncation t) {
  const auto q = SecantParams::make(p.g, p.m, p.d);
  const auto base = Truncation::for_params(q);
  require(t.degree >= base.degree && t.theta >= base.theta, "truncation covers C_d",
          "chern_series: truncation narrower than CH*(C_d)");
  const std::size_t order = t.degree;
  const std::uint64_t A = q.A();

  // (1 + xt)^{-A} = sum_i (-1)^i C(A+i-1, i) x^i t^i
  ChowSeries binom_part(order, t);
  for (std::size_t i = 0; i <= order; ++i) {
    BigInt c = binomial(A + i - 1, static_cast<std::int64_t>(i));
    if (i % 2) c = -c;
    binom_part[i].set(i, 0, Rational(c));
  }

  // u = -t theta / (1 + xt), whose t^k coefficient is (-1)^k theta x^{k-1}.
  ChowSeries u(order, t);
  for (std::size_t k = 1; k <= order; ++k) u[k].set(k - 1, 1, Rational(k % 2 ? -1 : 1));

  // exp(u) = sum_{k <= min(order, theta)} u^k / k!; every u^k carries theta^k.
  ChowSeries exp_u = ChowSeries::unit(order, t);
  ChowSeries power = ChowSeries::unit(order, t);
  Rational inv_fact = 1;
  const std::size_t kmax = std::min(order, t.theta);
  for (std::size_t k = 1; k <= kmax; ++k) {
    power = power * u;
    inv_fact /= static_cast<unsigned long>(k);
    for (std::size_t i = 0; i <= order; ++i) exp_u[i] += power[i] * inv_fact;
  }
  return binom_part * exp_u;
}

ChowSeries segre_series(const ChowSeries& c) {
  const auto t = c.truncation();
  require(c[0] == ChowElement::unit(t), "unit constant term", "segre_series: constant term is not the unit");
  ChowSeries s = ChowSeries::unit(c.order(), t);
  for (std::size_t n = 1; n <= c.order(); ++n) {
    ChowElement acc(t);
    for (std::size_t k = 1; k <= n; ++k) acc += c[k] * s[n - k];
    s[n] = acc * Rational(-1);
  }
  return s;
}

Rational pushforward_degree(const ChowElement& e, const SecantParams& p) {
  Rational total = 0;
  BigInt fact = 1;
  for (std::uint64_t j = 0; j <= p.d; ++j) {
    if (j > 0) fact *= static_cast<unsigned long>(j);
    const Rational c = e.coeff(p.d - j, j);
    if (c == 0) continue;
    total += c * Rational(fact * binomial(p.g, static_cast<std::int64_t>(j)));
  }
  return total;
}

BigInt degree_oracle(const SecantParams& p) {
  const auto q = SecantParams::make(p.g, p.m, p.d);
  const ChowSeries s = segre_series(chern_series(q));
  const Rational deg = pushforward_degree(s[q.d], q);
  if (deg.get_den() != 1 || deg < 0)
    throw TheoremViolation("degree_oracle: push-forward " + deg.get_str() + " is not a nonnegative integer");
  return deg.get_num();
}

BigInt restricted_segre(std::uint64_t A, std::uint64_t i) { return binomial(A, static_cast<std::int64_t>(i)); }

BigInt secant_degree(std::uint64_t g, std::uint64_t m, std::uint64_t d) {
  if (d == 0) {
    require(m > 2, "m > 2", "secant: deg(L) = m must exceed 2");
    return 1;
  }
  return degree_closed_form(SecantParams::make(g, m, d));
}

namespace {

std::vector<SecantParams> sweep_grid(std::uint64_t g_max, std::uint64_t d_max, std::uint64_t m_max) {
  std::vector<SecantParams> grid;
  for (std::uint64_t g = 0; g <= g_max; ++g)
    for (std::uint64_t d = 1; d <= d_max; ++d)
      for (std::uint64_t m = 3; m <= m_max; ++m) {
        SecantParams p{g, m, d};
        if (p.dimension_ok()) grid.push_back(p);
      }
  return grid;
}

}  // namespace

std::vector<SecantSweepEntry> secant_sweep(std::uint64_t g_max, std::uint64_t d_max, std::uint64_t m_max,
                                           Exec exec) {
  const auto grid = sweep_grid(g_max, d_max, m_max);
  return exec == Exec::parallel ? kernels::omp::secant_sweep(grid) : kernels::serial::secant_sweep(grid);
}

namespace kernels::serial {

std::vector<SecantSweepEntry> secant_sweep(const std::vector<SecantParams>& grid) {
  std::vector<SecantSweepEntry> out;
  out.reserve(grid.size());
  for (const auto& p : grid) out.push_back({p, degree_closed_form(p), degree_oracle(p)});
  return out;
}

}  // namespace kernels::serial

}  // namespace secmin
