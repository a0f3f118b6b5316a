#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "secmin/errors.hpp"
#include "secmin/lattice.hpp"
#include "secmin/sampling.hpp"

using namespace secmin;

namespace {

GramLattice hexagonal() { return GramLattice::make(2, {2, 1, 1, 2}); }

bool near(double a, double b, double tol = 1e-12) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }

std::int64_t norm_of(const GramLattice& l, const IntVec& v) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < l.rank(); ++i)
    for (std::size_t j = 0; j < l.rank(); ++j) s += l(i, j) * v[i] * v[j];
  return s;
}

// Coordinates of vectors of norm <= R satisfy x_i^2 <= R (G^{-1})_ii.
std::vector<std::int64_t> box_bounds(const GramLattice& l, std::int64_t radius_sq) {
  const auto inv = inverse(RationalGram::from(l));
  std::vector<std::int64_t> bound(l.rank());
  for (std::size_t i = 0; i < l.rank(); ++i)
    bound[i] = static_cast<std::int64_t>(std::floor(std::sqrt(radius_sq * inv(i, i).get_d()) + 1e-6));
  return bound;
}

double box_size(const GramLattice& l, std::int64_t radius_sq) {
  double s = 1;
  for (auto b : box_bounds(l, radius_sq)) s *= 2.0 * static_cast<double>(b) + 1;
  return s;
}

std::vector<ShortVector> box_enumerate(const GramLattice& l, std::int64_t radius_sq) {
  const std::size_t n = l.rank();
  const auto bound = box_bounds(l, radius_sq);
  std::vector<ShortVector> out;
  IntVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = -bound[i];
  while (true) {
    const auto first = std::find_if(x.begin(), x.end(), [](std::int64_t v) { return v != 0; });
    if (first != x.end() && *first > 0) {
      const auto nn = norm_of(l, x);
      if (nn <= radius_sq) out.push_back({x, nn});
    }
    std::size_t k = 0;
    while (k < n && x[k] == bound[k]) x[k] = -bound[k], ++k;
    if (k == n) break;
    ++x[k];
  }
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
    return a.norm_sq != b.norm_sq ? a.norm_sq < b.norm_sq : a.coords < b.coords;
  });
  return out;
}

std::int64_t max_diagonal(const GramLattice& l) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) r = std::max(r, l(i, i));
  return r;
}

// -1 when the search box is too large to scan.
std::int64_t shortest_by_box(const GramLattice& l) {
  if (box_size(l, max_diagonal(l)) > 2e5) return -1;
  return box_enumerate(l, max_diagonal(l)).front().norm_sq;
}

// A rank-2 sublattice of covolume U has a reduced basis with |v1|^2 |v2|^2 <= 4U^2/3,
// so both vectors lie within 4U^2/(3 lambda_1^2). Pairs are scored by Gram
// determinant over the squared gcd of their 2x2 minors.
bool check_rank_two(const GramLattice& l, const Rational& claimed) {
  const std::int64_t l1 = shortest_by_box(l);
  if (l1 < 0) return false;
  const Rational bound = Rational(4, 3) * claimed * claimed / l1;
  const std::int64_t radius_sq = BigInt(bound.get_num() / bound.get_den()).get_si() + 1;
  if (box_size(l, radius_sq) > 2e5) return false;
  const auto vs = box_enumerate(l, radius_sq);
  if (vs.size() > 1500) return false;
  Rational best = -1;
  const std::size_t n = l.rank();
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      const auto& u = vs[a].coords;
      const auto& v = vs[b].coords;
      std::int64_t g = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g = std::gcd(g, u[i] * v[j] - u[j] * v[i]);
      if (g == 0) continue;
      std::int64_t uv = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) uv += l(i, j) * u[i] * v[j];
      Rational c(BigInt(static_cast<long>(vs[a].norm_sq)) * vs[b].norm_sq - BigInt(static_cast<long>(uv)) * uv,
                 BigInt(static_cast<long>(g)) * g);
      c.canonicalize();
      if (best < 0 || c < best) best = c;
    }
  REQUIRE(best == claimed);
  return true;
}

}  // namespace

TEST_CASE("construction and validation") {
  CHECK(hexagonal().det() == 3);
  CHECK(GramLattice::identity(4).det() == 1);
  CHECK(near(GramLattice::make(2, {1, 0, 0, 4}).log_covolume(), std::log(2.0)));
  CHECK(hexagonal().norm_sq({1, -1}) == 2);
  CHECK(hexagonal().norm_sq({1, 1}) == 6);
  CHECK_THROWS_AS(GramLattice::make(2, {1, 2, 3, 4}), PreconditionError);
  CHECK_THROWS_AS(GramLattice::make(2, {1, 2, 2, 4}), PreconditionError);
  CHECK_THROWS_AS(GramLattice::make(2, {-1, 0, 0, 1}), PreconditionError);
  CHECK_THROWS_AS(GramLattice::make(2, {1, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(GramLattice::make(0, {}), PreconditionError);
  CHECK_THROWS_AS(GramLattice::identity(7), PreconditionError);
  CHECK(determinant({BigInt(2), BigInt(1), BigInt(1), BigInt(2)}, 2) == 3);
  CHECK(determinant({BigInt(0), BigInt(1), BigInt(1), BigInt(0)}, 2) == -1);
  CHECK(determinant({BigInt(1), BigInt(2), BigInt(2), BigInt(4)}, 2) == 0);
}

TEST_CASE("enumeration matches box search") {
  Rng rng(7);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rank = 1 + t % 4;
    const auto l = random_gram(rng, rank, 9);
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 40);
    if (box_size(l, r) > 2e5) continue;
    const auto want = box_enumerate(l, r);
    const auto got = enumerate_short_vectors(l, r, 4'000'000, Exec::serial);
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      REQUIRE(got[i].coords == want[i].coords);
      REQUIRE(got[i].norm_sq == want[i].norm_sq);
    }
  }
  const auto hex = enumerate_short_vectors(hexagonal(), 3, 100, Exec::serial);
  REQUIRE(hex.size() == 3);
  CHECK(hex[0].coords == IntVec{0, 1});
  CHECK(hex[1].coords == IntVec{1, -1});
  CHECK(hex[2].coords == IntVec{1, 0});
  CHECK(enumerate_short_vectors(GramLattice::identity(3), 0).empty());
  CHECK_THROWS_AS(enumerate_short_vectors(GramLattice::identity(6), 100, 10), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_short_vectors(GramLattice::identity(2), -1), PreconditionError);
}

TEST_CASE("successive minima examples") {
  const auto id = successive_minima(GramLattice::identity(2));
  CHECK(id.log_minima == std::vector<double>{0, 0});
  const auto hex = successive_minima(hexagonal());
  CHECK(near(hex.log_minima[0], 0.5 * std::log(2.0)));
  CHECK(near(hex.log_minima[1], 0.5 * std::log(2.0)));
  const auto d = successive_minima(GramLattice::make(2, {1, 0, 0, 4}));
  CHECK(d.log_minima[0] == 0);
  CHECK(near(d.log_minima[1], std::log(2.0)));
  CHECK(d.witnesses == std::vector<IntVec>{{1, 0}, {0, 1}});
}

TEST_CASE("successive minima properties") {
  Rng rng(11);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t rank = 1 + t % 6;
    const auto l = rank <= 3 ? random_gram(rng, rank, 10) : random_basis_gram(rng, rank, 2);
    const auto p = successive_minima(l, Exec::serial);
    REQUIRE(p.witnesses.size() == rank);
    REQUIRE(std::is_sorted(p.log_minima.begin(), p.log_minima.end()));
    for (std::size_t j = 0; j < rank; ++j) {
      REQUIRE(norm_of(l, p.witnesses[j]) == p.norms_sq[j]);
      REQUIRE(near(p.log_minima[j], 0.5 * std::log(static_cast<double>(p.norms_sq[j]))));
    }
    std::vector<BigInt> w;
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) w.emplace_back(static_cast<long>(p.witnesses[j][i]));
    REQUIRE(determinant(w, rank) != 0);
    const auto shortest = shortest_by_box(l);
    if (shortest >= 0) REQUIRE(p.norms_sq[0] == shortest);
    checked += shortest >= 0;
    REQUIRE(minkowski_second_holds(p));
  }
  MESSAGE("shortest-vector oracle checks: " << checked);
  CHECK(checked >= 120);
}

TEST_CASE("dual lattice") {
  const auto d = dual_lattice(hexagonal());
  CHECK(d(0, 0) == Rational(2, 3));
  CHECK(d(0, 1) == Rational(-1, 3));
  CHECK(d(1, 1) == Rational(2, 3));
  CHECK(dual_lattice(GramLattice::identity(3)) == RationalGram::from(GramLattice::identity(3)));
  CHECK(hexagonal().adjugate() == GramLattice::make(2, {2, -1, -1, 2}));
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rank = 1 + t % 6;
    const auto l = rank <= 3 ? random_gram(rng, rank, 12) : random_basis_gram(rng, rank, 3);
    REQUIRE(inverse(dual_lattice(l)) == RationalGram::from(l));
    const auto a = l.adjugate();
    BigInt want;
    mpz_pow_ui(want.get_mpz_t(), l.det().get_mpz_t(), l.rank() - 1);
    REQUIRE(a.det() == want);
  }
  RationalGram singular{2, {Rational(1), Rational(2), Rational(2), Rational(4)}};
  CHECK_THROWS_AS(inverse(singular), PreconditionError);
}

TEST_CASE("sublattice heights examples") {
  const auto hex = sublattice_heights(hexagonal());
  CHECK(near(hex.heights[0], 0.5 * std::log(2.0)));
  CHECK(near(hex.heights[1], 0.5 * std::log(3.0)));
  CHECK(hex.covolume_sq == std::vector<Rational>{Rational(2), Rational(3)});
  const auto d = sublattice_heights(GramLattice::make(2, {1, 0, 0, 4}));
  CHECK(d.heights[0] == 0);
  CHECK(near(d.heights[1], std::log(2.0)));
  CHECK_THROWS_AS(sublattice_heights(GramLattice::identity(5)), PreconditionError);
  CHECK(saturated_covolume_sq(GramLattice::identity(2), {{2, 0}}) == 1);
  CHECK(saturated_covolume_sq(GramLattice::identity(3), {{1, 1, 0}, {2, 2, 0}}) == 0);
  CHECK(saturated_covolume_sq(GramLattice::identity(3), {{2, 0, 0}, {0, 2, 0}}) == 1);
}

TEST_CASE("sublattice heights against independent oracles") {
  Rng rng(23);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t rank = 2 + t % 3;
    const auto l = random_gram(rng, rank, 8);
    const auto h = sublattice_heights(l, Exec::serial);
    REQUIRE(h.covolume_sq.front() == successive_minima(l, Exec::serial).norms_sq[0]);
    REQUIRE(h.covolume_sq.back() == Rational(l.det()));
    if (rank >= 3) checked += check_rank_two(l, h.covolume_sq[1]);
    REQUIRE(near(h.heights.front(), successive_minima(l, Exec::serial).log_minima.front()));
    for (std::size_t p = 0; p < rank; ++p) REQUIRE(near(h.heights[p], 0.5 * std::log(h.covolume_sq[p].get_d())));
  }
  MESSAGE("rank-two oracle checks: " << checked);
  CHECK(checked >= 60);
}

TEST_CASE("proposition 4") {
  const auto id = verify_prop4(GramLattice::identity(2));
  CHECK(id.all_hold);
  CHECK(id.rows[0].minima_sum == 0);
  CHECK(id.rows[0].dual_height_raw == 0);
  CHECK(near(id.rows[0].constant, std::log(2.0)));

  const auto hex = verify_prop4(hexagonal());
  const auto& r = hex.rows[0];
  CHECK(near(r.dual_height_raw, 0.5 * std::log(2.0 / 3)));
  CHECK(std::abs(r.dual_height_raw - -0.2027) < 5e-5);
  CHECK(near(r.minima_sum, 0.5 * std::log(2.0)));
  CHECK(std::abs(r.constant + r.dual_height_raw - 0.4904) < 5e-5);
  CHECK(near(r.dual_height, r.dual_height_raw + 0.5 * std::log(3.0)));
  CHECK(hex.rows[1].dual_height_raw == 0);
  for (const auto& row : hex.rows) {
    CHECK(near(row.lower_slack, row.minima_sum - row.dual_height));
    CHECK(near(row.upper_slack, row.constant + row.dual_height - row.minima_sum));
    CHECK(row.holds);
  }
  CHECK(verify_prop4(GramLattice::make(2, {1, 0, 0, 9})).all_hold);
  CHECK_THROWS_AS(verify_prop4(GramLattice::identity(2), NumberFieldData::make(2, 0, 1, 1)), PreconditionError);
  CHECK_THROWS_AS(verify_prop4(GramLattice::identity(5)), PreconditionError);

  for (const auto& l : random_grams(99, 120, 1, 4, 12)) {
    const auto rep = verify_prop4(l, NumberFieldData::rationals(), BallIndexing::printed, Exec::serial);
    REQUIRE(rep.all_hold);
    REQUIRE(rep.rows.size() == l.rank());
    REQUIRE(near(rep.rows.back().dual_height, 0.5 * std::log(l.det().get_d())));
  }
}

TEST_CASE("forms") {
  const auto xy = HomogeneousForm::make(2, {{{1, 1}, BigInt(1)}});
  CHECK(evaluate_form(xy, {1, 1}) == 1);
  const auto diff = HomogeneousForm::make(2, {{{2, 0}, BigInt(1)}, {{0, 2}, BigInt(-1)}});
  CHECK(evaluate_form(diff, {2, 2}) == 0);
  const auto merged = HomogeneousForm::make(2, {{{1, 1}, BigInt(2)}, {{1, 1}, BigInt(-2)}, {{2, 0}, BigInt(1)}});
  CHECK(merged.terms().size() == 1);
  CHECK_THROWS_AS(HomogeneousForm::make(2, {{{1, 1}, BigInt(1)}, {{1, 0}, BigInt(1)}}), PreconditionError);
  CHECK_THROWS_AS(HomogeneousForm::make(2, {{{1, 1, 0}, BigInt(1)}}), PreconditionError);
  CHECK_THROWS_AS(HomogeneousForm::make(2, {{{1, 1}, BigInt(0)}}), PreconditionError);
  CHECK_THROWS_AS(evaluate_form(xy, {1, 2, 3}), PreconditionError);

  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const auto f = random_dense_form(rng, 3, 3, 50);
    IntVec v{static_cast<std::int64_t>(rng() % 41) - 20, static_cast<std::int64_t>(rng() % 41) - 20,
             static_cast<std::int64_t>(rng() % 41) - 20};
    BigInt want = 0;
    for (const auto& [e, c] : f.terms()) {
      BigInt term = c;
      for (std::size_t i = 0; i < 3; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) term *= static_cast<long>(v[i]);
      want += term;
    }
    REQUIRE(evaluate_form(f, v) == want);
  }
}

TEST_CASE("hypersurface avoidance") {
  const auto id = successive_minima(GramLattice::identity(2));
  const auto r = avoid_hypersurface(HomogeneousForm::make(2, {{{1, 1}, BigInt(1)}}), id);
  CHECK(r.vector == IntVec{1, 1});
  CHECK(r.form_value == 1);
  CHECK(near(r.log_norm, 0.5 * std::log(2.0)));
  CHECK(near(r.log_bound, std::log(4.0)));
  CHECK(r.bound_holds);
  const auto sq = HomogeneousForm::make(2, {{{2, 0}, BigInt(1)}, {{1, 1}, BigInt(-2)}, {{0, 2}, BigInt(1)}});
  const auto s = avoid_hypersurface(sq, id);
  CHECK((s.vector == IntVec{0, 1} || s.vector == IntVec{1, 0}));
  CHECK_THROWS_AS(avoid_hypersurface(HomogeneousForm::make(3, {{{1, 1, 0}, BigInt(1)}}), id), PreconditionError);

  Rng rng(41);
  for (int t = 0; t < 120; ++t) {
    const std::size_t rank = 1 + t % 3;
    const unsigned degree = 1 + (t / 3) % 3;
    const auto l = random_gram(rng, rank, 12);
    const auto m = successive_minima(l, Exec::serial);
    const auto f = t % 2 ? random_product_form(rng, rank, degree, 5) : random_dense_form(rng, rank, degree, 5);
    const auto a = avoid_hypersurface(f, m);
    REQUIRE(a.form_value != 0);
    REQUIRE(evaluate_form(f, a.vector) == a.form_value);
    REQUIRE(a.bound_holds);
    IntVec v(rank, 0);
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) v[j] += a.grid_coeffs[i] * m.witnesses[i][j];
    REQUIRE(v == a.vector);
    // Every lexicographically earlier nonzero grid point lies on F = 0.
    IntVec n(rank, 0);
    while (true) {
      std::size_t k = rank;
      while (k > 0 && n[k - 1] == degree) n[k - 1] = 0, --k;
      if (k == 0) break;
      ++n[k - 1];
      if (n == a.grid_coeffs) break;
      IntVec u(rank, 0);
      for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) u[j] += n[i] * m.witnesses[i][j];
      REQUIRE(evaluate_form(f, u) == 0);
    }
  }
}

TEST_CASE("text formats") {
  const auto l = parse_gram("# hexagonal\n2\n2 1\n1 2\n");
  CHECK(l == hexagonal());
  CHECK(format_gram(l) == "[2,1;1,2]");
  CHECK(parse_gram("1 5") == GramLattice::make(1, {5}));
  CHECK_THROWS_AS(parse_gram(""), ParseError);
  CHECK_THROWS_AS(parse_gram("2\n1 0\n0"), ParseError);
  CHECK_THROWS_AS(parse_gram("2\n1 x\n0 1"), ParseError);
  CHECK_THROWS_AS(parse_gram("7\n"), ParseError);
  CHECK_THROWS_AS(parse_gram("2\n1 2\n3 4"), PreconditionError);
  const auto f = parse_form("# X1 X2\n1 1 1\n");
  CHECK(f.num_vars() == 2);
  CHECK(f.degree() == 2);
  CHECK_THROWS_AS(parse_form(""), ParseError);
  CHECK_THROWS_AS(parse_form("1 a 1"), ParseError);
}
