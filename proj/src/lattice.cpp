#include "secmin/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lattice_detail.hpp"
#include "secmin/errors.hpp"

namespace secmin {

namespace {

std::vector<BigInt> leading_block(const std::vector<std::int64_t>& g, std::size_t n, std::size_t k) {
  std::vector<BigInt> out;
  out.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out.emplace_back(static_cast<long>(g[i * n + j]));
  return out;
}

std::int64_t to_int64(const BigInt& x, const char* what) {
  if (!x.fits_slong_p()) throw ResourceError(std::string(what) + ": value exceeds 64-bit range");
  return x.get_si();
}

BigInt gcd_of_minors(const std::vector<IntVec>& basis, std::size_t n) {
  const std::size_t p = basis.size();
  BigInt g = 0;
  // Iterate over all p-subsets of the n coordinates.
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    std::vector<BigInt> m;
    m.reserve(p * p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (pick[c]) m.emplace_back(static_cast<long>(basis[r][c]));
    const BigInt d = determinant(std::move(m), p);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return g;
}

BigInt gram_det_of(const GramLattice& l, const std::vector<IntVec>& basis) {
  const std::size_t p = basis.size();
  std::vector<BigInt> m(p * p);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a; b < p; ++b) {
      BigInt s = 0;
      for (std::size_t i = 0; i < l.rank(); ++i) {
        if (basis[a][i] == 0) continue;
        BigInt row = 0;
        for (std::size_t j = 0; j < l.rank(); ++j) row += BigInt(static_cast<long>(l(i, j))) * static_cast<long>(basis[b][j]);
        s += row * static_cast<long>(basis[a][i]);
      }
      m[a * p + b] = s;
      m[b * p + a] = s;
    }
  return determinant(std::move(m), p);
}

double log_sqrt(const Rational& q) {
  return 0.5 * (log_bigint(q.get_num()) - log_bigint(q.get_den()));
}

}  // namespace

// ---------------------------------------------------------------------------
// Exact matrix algebra

BigInt determinant(std::vector<BigInt> m, std::size_t n) {
  require(m.size() == n * n, "square matrix", "determinant: size mismatch");
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv * n + k] == 0) ++piv;
      if (piv == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt v = m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i * n + j] = v;
      }
      m[i * n + k] = 0;
    }
    prev = m[k * n + k];
  }
  BigInt d = m[n * n - 1];
  return sign > 0 ? d : BigInt(-d);
}

RationalGram RationalGram::from(const GramLattice& l) {
  RationalGram r;
  r.rank = l.rank();
  for (auto x : l.entries()) r.entries.emplace_back(static_cast<long>(x));
  return r;
}

RationalGram inverse(const RationalGram& m) {
  const std::size_t n = m.rank;
  require(m.entries.size() == n * n, "square matrix", "inverse: size mismatch");
  std::vector<Rational> a = m.entries;
  std::vector<Rational> inv(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    require(piv < n, "nonsingular", "inverse: matrix is singular");
    if (piv != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a[k * n + j], a[piv * n + j]);
        std::swap(inv[k * n + j], inv[piv * n + j]);
      }
    const Rational p = a[k * n + k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k * n + j] /= p;
      inv[k * n + j] /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a[i * n + k] == 0) continue;
      const Rational f = a[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i * n + j] -= f * a[k * n + j];
        inv[i * n + j] -= f * inv[k * n + j];
      }
    }
  }
  return {n, std::move(inv)};
}

// ---------------------------------------------------------------------------
// GramLattice

GramLattice GramLattice::make(std::size_t rank, std::vector<std::int64_t> entries) {
  require(rank >= 1 && rank <= kMaxMinimaRank, "1 <= rank <= 6",
          "gram: rank " + std::to_string(rank) + " outside 1..6");
  require(entries.size() == rank * rank, "rank x rank entries",
          "gram: expected " + std::to_string(rank * rank) + " entries, got " + std::to_string(entries.size()));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      require(entries[i * rank + j] == entries[j * rank + i], "symmetric", "gram: matrix is not symmetric");
  BigInt det = 0;
  for (std::size_t k = 1; k <= rank; ++k) {
    det = determinant(leading_block(entries, rank, k), k);
    require(det > 0, "positive definite",
            "gram: leading minor of order " + std::to_string(k) + " is " + det.get_str() + ", not positive");
  }
  return GramLattice(rank, std::move(entries), std::move(det));
}

GramLattice GramLattice::identity(std::size_t rank) {
  std::vector<std::int64_t> e(rank * rank, 0);
  for (std::size_t i = 0; i < rank; ++i) e[i * rank + i] = 1;
  return make(rank, std::move(e));
}

double GramLattice::log_covolume() const { return 0.5 * log_bigint(det_); }

BigInt GramLattice::norm_sq(const IntVec& v) const {
  require(v.size() == rank_, "vector arity", "norm_sq: vector has wrong length");
  BigInt s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      s += BigInt(static_cast<long>(gram_[i * rank_ + j])) * static_cast<long>(v[i]) * static_cast<long>(v[j]);
  return s;
}

GramLattice GramLattice::adjugate() const {
  const RationalGram inv = inverse(RationalGram::from(*this));
  std::vector<std::int64_t> adj(rank_ * rank_);
  for (std::size_t k = 0; k < adj.size(); ++k) {
    const Rational v = inv.entries[k] * Rational(det_);
    if (v.get_den() != 1) throw TheoremViolation("adjugate: non-integral entry " + v.get_str());
    adj[k] = to_int64(v.get_num(), "adjugate");
  }
  return make(rank_, std::move(adj));
}

RationalGram dual_lattice(const GramLattice& l) { return inverse(RationalGram::from(l)); }

// ---------------------------------------------------------------------------
// Enumeration

std::vector<ShortVector> enumerate_short_vectors(const GramLattice& l, std::int64_t radius_sq, std::size_t budget,
                                                 Exec exec) {
  require(radius_sq >= 0, "radius_sq >= 0", "enumerate: negative radius");
  return exec == Exec::parallel ? kernels::omp::enumerate(l, radius_sq, budget)
                                : kernels::serial::enumerate(l, radius_sq, budget);
}

namespace kernels::serial {

std::vector<ShortVector> enumerate(const GramLattice& l, std::int64_t radius_sq, std::size_t budget) {
  const auto chol = detail::cholesky(l);
  const std::int64_t top = detail::top_bound(chol, radius_sq);
  std::vector<ShortVector> out;
  for (std::int64_t t = -top; t <= top; ++t) {
    detail::enumerate_with_top(l, chol, radius_sq, t, [&](const IntVec& x, std::int64_t nn) {
      if (out.size() >= budget)
        throw BudgetExceeded(static_cast<double>(radius_sq),
                             "enumerate: more than " + std::to_string(budget) + " vectors within radius^2 " +
                                 std::to_string(radius_sq));
      out.push_back({x, nn});
    });
  }
  detail::sort_short_vectors(out);
  return out;
}

}  // namespace kernels::serial

// ---------------------------------------------------------------------------
// Successive minima

MinimaProfile successive_minima(const GramLattice& l, Exec exec) {
  const std::size_t n = l.rank();
  std::int64_t radius_sq = 0;
  for (std::size_t i = 0; i < n; ++i) radius_sq = std::max(radius_sq, l(i, i));
  const auto vecs = enumerate_short_vectors(l, radius_sq, 4'000'000, exec);

  MinimaProfile prof{l, {}, {}, {}};
  for (const auto& sv : vecs) {
    if (prof.witnesses.size() == n) break;
    auto trial = prof.witnesses;
    trial.push_back(sv.coords);
    if (gcd_of_minors(trial, n) == 0) continue;
    prof.witnesses.push_back(sv.coords);
    prof.norms_sq.push_back(sv.norm_sq);
    prof.log_minima.push_back(0.5 * std::log(static_cast<double>(sv.norm_sq)));
  }
  if (prof.witnesses.size() != n)
    throw TheoremViolation("successive_minima: basis vectors lie within radius but no full independent set found");
  return prof;
}

bool minkowski_second_holds(const MinimaProfile& p) {
  const std::size_t n = p.lattice.rank();
  double lhs = 0;
  for (auto v : p.log_minima) lhs += 2 * v;
  const double gamma = static_cast<double>(n) * std::log(2.0) - static_cast<double>(ball_volume_log(n));
  const double rhs = 2 * gamma + log_bigint(p.lattice.det());
  return lhs <= rhs + kLogTolerance * std::max(1.0, std::abs(rhs));
}

// ---------------------------------------------------------------------------
// Sublattice heights

Rational saturated_covolume_sq(const GramLattice& l, const std::vector<IntVec>& basis) {
  if (basis.empty()) return 1;
  const BigInt idx = gcd_of_minors(basis, l.rank());
  if (idx == 0) return 0;
  Rational r(gram_det_of(l, basis), BigInt(idx * idx));
  r.canonicalize();
  return r;
}

namespace {

constexpr std::size_t kMaxCombinations = 50'000'000;

bool is_primitive(const IntVec& v) {
  std::int64_t g = 0;
  for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
  return g == 1;
}

Rational min_covolume_sq(const GramLattice& l, std::size_t p, const MinimaProfile& minima, Exec exec) {
  if (p == 1) return Rational(minima.norms_sq[0]);
  // corank one: covol(F)^2 = w^T adj(G) w for the primitive dual vector w orthogonal to F
  if (p + 1 == l.rank()) return Rational(successive_minima(l.adjugate(), exec).norms_sq[0]);
  std::vector<IntVec> first(minima.witnesses.begin(), minima.witnesses.begin() + static_cast<std::ptrdiff_t>(p));
  Rational best = saturated_covolume_sq(l, first);
  // candidate radius: gamma_p U / lambda_1^{p-1}
  const long double gamma = std::exp(static_cast<long double>(p) * std::log(2.0L) - ball_volume_log(p));
  const long double u_sq = static_cast<long double>(best.get_d());
  const long double l1_sq = static_cast<long double>(minima.norms_sq[0]);
  const long double r_sq = gamma * gamma * u_sq / std::pow(l1_sq, static_cast<long double>(p - 1));
  const auto radius_sq = static_cast<std::int64_t>(std::ceil(r_sq * (1 + 1e-9L)));

  std::vector<IntVec> cand;
  for (auto& sv : enumerate_short_vectors(l, radius_sq, 4'000'000, exec))
    if (is_primitive(sv.coords)) cand.push_back(std::move(sv.coords));

  const std::size_t k = cand.size();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < p; ++i) combos = combos * (k - i) / (i + 1);
  if (k >= p && combos > kMaxCombinations)
    throw BudgetExceeded(static_cast<double>(radius_sq), "sublattice_heights: " + std::to_string(combos) +
                                                             " candidate subsets for p=" + std::to_string(p));

  std::vector<std::size_t> idx(p);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<IntVec> basis(p);
  while (k >= p) {
    for (std::size_t i = 0; i < p; ++i) basis[i] = cand[idx[i]];
    const Rational c = saturated_covolume_sq(l, basis);
    if (c > 0 && c < best) best = c;
    std::size_t i = p;
    while (i > 0 && idx[i - 1] == k - p + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return best;
}

}  // namespace

SublatticeHeightTable sublattice_heights(const GramLattice& l, Exec exec) {
  const std::size_t n = l.rank();
  require(n <= kMaxHeightsRank, "rank <= 4", "sublattice_heights: rank " + std::to_string(n) + " exceeds 4");
  const MinimaProfile minima = successive_minima(l, exec);
  SublatticeHeightTable t{l, {}, {}};
  for (std::size_t p = 1; p <= n; ++p) {
    const Rational c = p == n ? Rational(l.det()) : min_covolume_sq(l, p, minima, exec);
    t.covolume_sq.push_back(c);
    t.heights.push_back(log_sqrt(c));
  }
  return t;
}

// ---------------------------------------------------------------------------
// Proposition 4

Prop4Report verify_prop4(const GramLattice& l, const NumberFieldData& field, BallIndexing balls, Exec exec) {
  require(field.is_rationals() && field.r1 == 1 && field.r2 == 0 && field.log_abs_disc == 0, "K = Q",
          "prop4: only K = Q is supported");
  const std::size_t n = l.rank();
  require(n <= kMaxHeightsRank, "rank <= 4", "prop4: rank " + std::to_string(n) + " exceeds 4");

  Prop4Report rep{l, successive_minima(l, exec), {}, true};
  // V* has Gram adj(G)/det(G); heights of the adjugate shift by q/2 log det.
  const double log_det = log_bigint(l.det());
  const SublatticeHeightTable adj = sublattice_heights(l.adjugate(), exec);
  const double constant = static_cast<double>(constant_C(n - 1, field, balls));

  double sum = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    sum += rep.minima.log_minima[p - 1];
    const std::size_t q = n - p;
    Prop4Row row;
    row.p = p;
    row.minima_sum = sum;
    row.dual_height_raw = q == 0 ? 0.0 : adj.heights[q - 1] - 0.5 * static_cast<double>(q) * log_det;
    row.dual_height = row.dual_height_raw + 0.5 * log_det;
    row.constant = constant;
    row.lower_slack = row.minima_sum - row.dual_height;
    row.upper_slack = row.constant + row.dual_height - row.minima_sum;
    const double tol = kLogTolerance * std::max(1.0, std::abs(row.minima_sum));
    row.holds = row.lower_slack >= -tol && row.upper_slack >= -tol;
    rep.all_hold = rep.all_hold && row.holds;
    rep.rows.push_back(row);
  }
  if (!rep.all_hold) {
    std::ostringstream os;
    os << "prop4 violated for gram " << format_gram(l);
    for (const auto& r : rep.rows)
      if (!r.holds) os << " p=" << r.p << " lower_slack=" << r.lower_slack << " upper_slack=" << r.upper_slack;
    throw TheoremViolation(os.str());
  }
  return rep;
}

namespace kernels::serial {

std::vector<Prop4Report> prop4_batch(const std::vector<GramLattice>& lattices, BallIndexing balls) {
  std::vector<Prop4Report> out;
  out.reserve(lattices.size());
  for (const auto& l : lattices) out.push_back(verify_prop4(l, NumberFieldData::rationals(), balls, Exec::serial));
  return out;
}

}  // namespace kernels::serial

// ---------------------------------------------------------------------------
// Proposition 5

AvoidResult avoid_hypersurface(const HomogeneousForm& f, const MinimaProfile& minima) {
  const std::size_t n = minima.lattice.rank();
  require(f.num_vars() == n, "num_vars = rank",
          "avoid: form has " + std::to_string(f.num_vars()) + " variables, lattice rank is " + std::to_string(n));
  const std::uint32_t D = f.degree();
  require(D >= 1, "D >= 1", "avoid: form degree must be positive");
  double grid = 1;
  for (std::size_t i = 0; i < n; ++i) grid *= D + 1;
  require(grid <= 1e6, "grid feasible", "avoid: grid (D+1)^rank exceeds 10^6 points");

  double lambda_max = 0;
  for (auto v : minima.log_minima) lambda_max = std::max(lambda_max, v);
  const double log_bound = lambda_max + std::log(static_cast<double>(D) * static_cast<double>(n));

  IntVec coeffs(n, 0);
  while (true) {
    // next grid point, first coordinate slowest
    std::size_t i = n;
    while (i > 0 && coeffs[i - 1] == static_cast<std::int64_t>(D)) coeffs[--i] = 0;
    if (i == 0) break;
    ++coeffs[i - 1];

    IntVec v(n, 0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t c = 0; c < n; ++c) v[c] += coeffs[k] * minima.witnesses[k][c];
    BigInt value = evaluate_form(f, v);
    if (value == 0) continue;
    AvoidResult r;
    r.grid_coeffs = coeffs;
    r.vector = v;
    r.form_value = value;
    r.log_norm = 0.5 * log_bigint(minima.lattice.norm_sq(v));
    r.log_bound = log_bound;
    r.bound_holds = r.log_norm <= log_bound + kLogTolerance * std::max(1.0, std::abs(log_bound));
    return r;
  }
  throw TheoremViolation("avoid: form vanishes on the whole grid [0, D]^rank");
}

// ---------------------------------------------------------------------------
// Text formats

namespace {

std::vector<std::string> tokens_without_comments(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream is(body);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::int64_t parse_int(const std::string& tok, const char* what) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + ": '" + tok + "' is not an integer");
  }
  if (pos != tok.size()) throw ParseError(std::string(what) + ": '" + tok + "' is not an integer");
  return v;
}

}  // namespace

GramLattice parse_gram(const std::string& text) {
  std::vector<std::string> toks;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line))
    for (auto& t : tokens_without_comments(line)) toks.push_back(std::move(t));
  if (toks.empty()) throw ParseError("gram: empty input");
  const std::int64_t rank = parse_int(toks[0], "gram rank");
  if (rank < 1 || rank > static_cast<std::int64_t>(kMaxMinimaRank))
    throw ParseError("gram: rank " + toks[0] + " outside 1..6");
  const auto r = static_cast<std::size_t>(rank);
  if (toks.size() != 1 + r * r)
    throw ParseError("gram: expected " + std::to_string(r * r) + " entries, got " + std::to_string(toks.size() - 1));
  std::vector<std::int64_t> e;
  for (std::size_t k = 1; k < toks.size(); ++k) e.push_back(parse_int(toks[k], "gram entry"));
  return GramLattice::make(r, std::move(e));
}

std::string format_gram(const GramLattice& l) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < l.rank(); ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < l.rank(); ++j) os << (j ? "," : "") << l(i, j);
  }
  os << ']';
  return os.str();
}

}  // namespace secmin
