#include <doctest.h>

#include <omp.h>

#include "secmin/chow.hpp"
#include "secmin/errors.hpp"
#include "secmin/granville.hpp"
#include "secmin/lattice.hpp"
#include "secmin/sampling.hpp"

using namespace secmin;

namespace {

// Force real concurrency even on a single-core machine.
struct Threads {
  int saved = omp_get_max_threads();
  explicit Threads(int n) { omp_set_num_threads(n); }
  ~Threads() { omp_set_num_threads(saved); }
};

const PrimePowerSieve& sieve() {
  static const PrimePowerSieve s(200'000);
  return s;
}

}  // namespace

TEST_CASE("granville kernels agree") {
  for (int threads : {1, 3, 8}) {
    Threads guard(threads);
    const auto a = kernels::serial::theorem3_records(2, 700, sieve());
    const auto b = kernels::omp::theorem3_records(2, 700, sieve());
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].n == b[i].n);
      REQUIRE(a[i].b == b[i].b);
      REQUIRE(a[i].c == b[i].c);
      REQUIRE(a[i].witness_prime_power == b[i].witness_prime_power);
    }
    CHECK(kernels::serial::quarter_bound_violation(30, 200'000, sieve()) ==
          kernels::omp::quarter_bound_violation(30, 200'000, sieve()));
    CHECK(kernels::serial::quarter_bound_violation(2, 200'000, sieve()) ==
          kernels::omp::quarter_bound_violation(2, 200'000, sieve()));
    for (double e : {0.535, 23.0 / 18}) {
      const auto s = kernels::serial::c_sum_stats(200'000, e, sieve());
      const auto o = kernels::omp::c_sum_stats(200'000, e, sieve());
      CHECK(s.sum == o.sum);
      CHECK(s.max_ratio == o.max_ratio);
      CHECK(s.argmax == o.argmax);
      CHECK(s.rh_max_ratio == o.rh_max_ratio);
    }
  }
}

TEST_CASE("secant sweep kernels agree") {
  std::vector<SecantParams> grid;
  for (std::uint64_t g = 0; g <= 5; ++g)
    for (std::uint64_t d = 1; d <= 5; ++d)
      for (std::uint64_t m = 3; m <= 22; ++m)
        if (SecantParams{g, m, d}.dimension_ok()) grid.push_back({g, m, d});
  Threads guard(4);
  const auto a = kernels::serial::secant_sweep(grid);
  const auto b = kernels::omp::secant_sweep(grid);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].params == b[i].params);
    REQUIRE(a[i].closed == b[i].closed);
    REQUIRE(a[i].oracle == b[i].oracle);
  }
}

TEST_CASE("enumeration kernels agree") {
  Threads guard(5);
  Rng rng(17);
  for (int t = 0; t < 80; ++t) {
    const std::size_t rank = 1 + t % 6;
    const auto l = rank <= 3 ? random_gram(rng, rank, 12) : random_basis_gram(rng, rank, 2);
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng() % 60);
    const auto a = kernels::serial::enumerate(l, r, 4'000'000);
    const auto b = kernels::omp::enumerate(l, r, 4'000'000);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      REQUIRE(a[i].coords == b[i].coords);
      REQUIRE(a[i].norm_sq == b[i].norm_sq);
    }
  }
  const auto id = GramLattice::identity(6);
  CHECK_THROWS_AS(kernels::serial::enumerate(id, 40, 50), BudgetExceeded);
  CHECK_THROWS_AS(kernels::omp::enumerate(id, 40, 50), BudgetExceeded);
}

TEST_CASE("prop4 batch kernels agree") {
  Threads guard(4);
  const auto lats = random_grams(314, 120, 1, 4, 10);
  const auto a = kernels::serial::prop4_batch(lats, BallIndexing::printed);
  const auto b = kernels::omp::prop4_batch(lats, BallIndexing::printed);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].lattice == lats[i]);
    REQUIRE(b[i].lattice == lats[i]);
    REQUIRE(a[i].rows.size() == b[i].rows.size());
    for (std::size_t j = 0; j < a[i].rows.size(); ++j) {
      REQUIRE(a[i].rows[j].dual_height == b[i].rows[j].dual_height);
      REQUIRE(a[i].rows[j].minima_sum == b[i].rows[j].minima_sum);
      REQUIRE(a[i].rows[j].holds == b[i].rows[j].holds);
    }
  }
  const auto shifted = kernels::omp::prop4_batch(lats, BallIndexing::shifted);
  for (const auto& r : shifted) CHECK(r.all_hold);
}
