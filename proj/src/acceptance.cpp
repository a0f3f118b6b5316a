#include "secmin/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "secmin/bounds.hpp"
#include "secmin/chow.hpp"
#include "secmin/errors.hpp"
#include "secmin/granville.hpp"
#include "secmin/lattice.hpp"
#include "secmin/record.hpp"
#include "secmin/sampling.hpp"
#include "secmin/sieve.hpp"

namespace secmin {

const char* to_string(CriterionStatus s) {
  switch (s) {
    case CriterionStatus::pass: return "PASS";
    case CriterionStatus::fail: return "FAIL";
    case CriterionStatus::report: return "REPORT";
  }
  return "?";
}

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> info;
  bool report_only = false;
};

// Legendre: v_p(n!) = sum_i floor(n / p^i).
unsigned legendre(std::uint64_t n, std::uint64_t p) {
  unsigned v = 0;
  for (std::uint64_t q = p; q <= n; q *= p) {
    v += static_cast<unsigned>(n / q);
    if (q > n / p) break;
  }
  return v;
}

Outcome ac1(Exec exec) {
  const auto recs = verify_theorem3(3000, exec);
  Outcome o;
  for (const auto& r : recs)
    if (!r.b || *r.b != r.c) {
      o.ok = false;
      o.detail = "b(" + std::to_string(r.n) + ") != c";
      return o;
    }
  o.ok = recs.size() == 2999;
  o.detail = "checked n=2..3000 records=" + std::to_string(recs.size());
  return o;
}

Outcome ac2(const PrimePowerSieve& sieve) {
  Outcome o;
  std::size_t count = 0;
  for (std::uint64_t q = 2; q <= 3000; ++q) {
    if (!sieve.is_prime_power(q)) continue;
    ++count;
    if (b_of(q) != 0) {
      o.ok = false;
      o.detail = "b(" + std::to_string(q) + ") != 0";
      return o;
    }
  }
  o.detail = "prime_powers=" + std::to_string(count) + " all b=0";
  return o;
}

Outcome ac3(const PrimePowerSieve& sieve, Exec exec) {
  Outcome o;
  o.ok = verify_quarter_bound(1'000'000, sieve, exec);
  o.detail = "range=30..1000000";
  return o;
}

Outcome ac4() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t n = 2; n <= 500; ++n)
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!is_prime(p)) continue;
      for (std::uint64_t m = 0; m <= n; ++m) {
        const unsigned want = legendre(n, p) - legendre(m, p) - legendre(n - m, p);
        ++checks;
        if (kummer_valuation(n, m, p) != want) {
          o.ok = false;
          o.detail = "v_" + std::to_string(p) + "(C(" + std::to_string(n) + "," + std::to_string(m) + ")) mismatch";
          return o;
        }
      }
    }
  o.detail = "triples=" + std::to_string(checks);
  return o;
}

Outcome ac5() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t n = 2; n <= 2000; ++n)
    for (std::uint64_t p = 2; p <= n; ++p) {
      if (!is_prime(p)) continue;
      std::uint64_t pk = 1;
      while (pk <= n / p) pk *= p;
      if (n >= 2 * pk) continue;
      ++checks;
      if (b_p(n, p) != n - pk) {
        o.ok = false;
        o.detail = "b_p(" + std::to_string(n) + "," + std::to_string(p) + ") != n - p^k";
        return o;
      }
    }
  o.detail = "pairs=" + std::to_string(checks);
  return o;
}

Outcome ac6(Exec exec) {
  Outcome o;
  const auto sweep = secant_sweep(6, 6, 40, exec);
  for (const auto& e : sweep)
    if (e.closed != e.oracle) {
      o.ok = false;
      o.detail = "D(" + std::to_string(e.params.g) + "," + std::to_string(e.params.m) + "," +
                 std::to_string(e.params.d) + ") closed=" + e.closed.get_str() + " oracle=" + e.oracle.get_str();
      return o;
    }
  o.detail = "triples=" + std::to_string(sweep.size());
  return o;
}

Outcome ac7() {
  Outcome o;
  std::size_t checks = 0;
  for (std::uint64_t g = 0; g <= 10; ++g)
    for (std::uint64_t m = 3; m <= 50; ++m) {
      const auto p = SecantParams::make(g, m, 1);
      const BigInt want = static_cast<unsigned long>(m + 2 * g - 2);
      ++checks;
      if (degree_closed_form(p) != want || degree_oracle(p) != want) {
        o.ok = false;
        o.detail = "D(" + std::to_string(g) + "," + std::to_string(m) + ",1) != m+2g-2";
        return o;
      }
    }
  o.detail = "pairs=" + std::to_string(checks);
  return o;
}

Outcome ac8(std::uint64_t seed, Exec exec) {
  Outcome o;
  std::vector<GramLattice> lats = {GramLattice::identity(2), GramLattice::make(2, {2, 1, 1, 2}),
                                   GramLattice::make(2, {1, 0, 0, 4})};
  for (auto& l : random_grams(seed, 500, 1, 3, 12)) lats.push_back(std::move(l));
  const auto reports = exec == Exec::parallel ? kernels::omp::prop4_batch(lats, BallIndexing::printed)
                                              : kernels::serial::prop4_batch(lats, BallIndexing::printed);
  double min_lower = INFINITY, min_upper = INFINITY;
  for (const auto& r : reports) {
    if (!minkowski_second_holds(r.minima)) {
      o.ok = false;
      o.detail = "minkowski certificate failed for " + format_gram(r.lattice);
      return o;
    }
    for (const auto& row : r.rows) {
      min_lower = std::min(min_lower, row.lower_slack);
      min_upper = std::min(min_upper, row.upper_slack);
    }
  }
  o.ok = reports.size() == 503;
  o.detail = "lattices=" + std::to_string(reports.size()) + " min_lower_slack=" + format_double(min_lower) +
             " min_upper_slack=" + format_double(min_upper);
  return o;
}

Outcome ac9(std::uint64_t seed, Exec exec) {
  Outcome o;
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  double worst = -INFINITY;
  for (int i = 0; i < 200; ++i) {
    const std::size_t rank = 1 + static_cast<std::size_t>(i % 3);
    const auto D = static_cast<std::uint32_t>(1 + (i / 3) % 3);
    const auto lat = random_gram(rng, rank, 12);
    const auto f = i % 2 ? random_product_form(rng, rank, D, 3) : random_dense_form(rng, rank, D, 5);
    const auto minima = successive_minima(lat, exec);
    const auto r = avoid_hypersurface(f, minima);
    if (evaluate_form(f, r.vector) == 0 || !r.bound_holds) {
      o.ok = false;
      o.detail = "form " + std::to_string(i) + " on " + format_gram(lat) + " failed";
      return o;
    }
    worst = std::max(worst, r.log_norm - r.log_bound);
  }
  o.detail = "forms=200 max(log_norm-log_bound)=" + format_double(worst);
  return o;
}

Outcome ac10() {
  Outcome o;
  std::size_t checks = 0;
  Real worst = 0, max_gap = 0;
  for (std::uint64_t degk : {1, 2, 3})
    for (std::uint64_t g = 2; g <= 5; ++g)
      for (std::uint64_t m = 5; m <= 24; ++m)
        for (std::uint64_t k = 2; 2 * k < m; ++k)
          for (Real L2 : {Real(0.5), Real(12), Real(50)}) {
            const auto field = degk == 1 ? NumberFieldData::rationals() : NumberFieldData::make(degk, degk, 0, 1.5L);
            const auto s = SurfaceData::make(g, m, L2, 1, 1, field);
            const Real mm = static_cast<Real>(m);
            const Real e = L2 / (2 * mm);
            const Real got = thm4_lambda_bound(s, k, e);
            const BigInt D = degree_oracle(SecantParams::make(g, m, k - 1));
            const Real log_d = static_cast<Real>(log_bigint(D)) + std::log(static_cast<Real>(m + g));
            const Real want = L2 / (2 * mm * static_cast<Real>(degk)) - log_d / (mm * mm) - 1;
            const Real rel = std::abs(got - want) / std::max(Real(1), std::abs(want));
            worst = std::max(worst, rel);
            const Real literal21 = L2 / (2 * mm * static_cast<Real>(degk)) - log_d / (2 * mm) - 1;
            max_gap = std::max(max_gap, std::abs(got - literal21));
            ++checks;
            if (rel > 1e-9L) {
              o.ok = false;
              o.detail = "thm4_lambda at e=L2/(2m) mismatch g=" + std::to_string(g) + " m=" + std::to_string(m) +
                         " k=" + std::to_string(k);
              return o;
            }
          }

  // Discriminant coefficient of cor2: finite difference in log|disc|.
  std::size_t disc_checks = 0;
  Real worst_disc = 0;
  for (std::uint64_t g = 2; g <= 8; ++g)
    for (std::uint64_t n = 1; n <= 6; ++n) {
      const std::uint64_t m = 2 * (g - 1) * n;
      if (m + g - 1 != (2 * n + 1) * (g - 1)) {
        o.ok = false;
        o.detail = "m+g-1 != (2n+1)(g-1) at g=" + std::to_string(g) + " n=" + std::to_string(n);
        return o;
      }
      for (std::uint64_t k = 1; k < std::min<std::uint64_t>((g - 1) * n, 4); ++k) {
        const auto f1 = NumberFieldData::make(2, 2, 0, 1);
        const auto f2 = NumberFieldData::make(2, 2, 0, 3);
        const auto s1 = SurfaceData::omega_power(g, n, 2, f1);
        const auto s2 = SurfaceData::omega_power(g, n, 2, f2);
        const Real slope = (cor2_exact(s2, n, k) - cor2_exact(s1, n, k)) / 2;
        const Real printed = -static_cast<Real>((2 * n + 1) * (g - 1)) / 2;
        const Real rel = std::abs(slope - printed) / std::abs(printed);
        worst_disc = std::max(worst_disc, rel);
        ++disc_checks;
        if (rel > 1e-9L) {
          o.ok = false;
          o.detail = "cor2 disc coefficient " + format_real(slope) + " != " + format_real(printed);
          return o;
        }
      }
    }
  o.detail = "lambda_checks=" + std::to_string(checks) + " max_rel=" + format_real(worst) +
             " cor2_checks=" + std::to_string(disc_checks) + " max_rel_disc=" + format_real(worst_disc);
  o.info.push_back("INFO AC10 literal_eq21_max_abs_gap=" + format_real(max_gap) +
                   " (log term /(2m) vs /m^2; compared as principal term)");
  return o;
}

Outcome ac11(const PrimePowerSieve& sieve, Exec exec) {
  Outcome o;
  o.report_only = true;
  for (double ex : {0.535, 23.0 / 18.0}) {
    const auto r = asymptotic_report(1'000'000, ex, sieve, exec);
    Record rec("REPORT");
    rec.add("eq", ex < 1 ? "5" : "7")
        .add("n", r.n)
        .add("exponent", r.exponent)
        .add("partial_sum", r.partial_sum)
        .add("ratio", r.ratio)
        .add("max_ratio", r.max_ratio)
        .add("argmax", r.argmax)
        .add("rh_max_ratio", r.rh_max_ratio)
        .add("rh_sum_ratio", r.rh_sum_ratio);
    o.info.push_back(rec.text());
  }
  o.detail = "asymptotic ratios emitted (not asserted)";
  return o;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  struct Entry {
    const char* id;
    const char* title;
    std::function<Outcome()> run;
  };
  std::unique_ptr<PrimePowerSieve> sieve;
  auto get_sieve = [&]() -> const PrimePowerSieve& {
    if (!sieve) sieve = std::make_unique<PrimePowerSieve>(1'000'000);
    return *sieve;
  };
  const Exec exec = opts.exec;
  const std::vector<Entry> entries = {
      {"AC1", "theorem 3: b(n) = c(n) for 2 <= n <= 3000", [&] { return ac1(exec); }},
      {"AC2", "b(p^k) = 0 for prime powers <= 3000", [&] { return ac2(get_sieve()); }},
      {"AC3", "quarter bound c(n) <= n/4 for 30 <= n <= 10^6", [&] { return ac3(get_sieve(), exec); }},
      {"AC4", "Kummer carries = Legendre valuation, n <= 500", [] { return ac4(); }},
      {"AC5", "b_p(n,p) = n - p^k for leading digit 1, n <= 2000", [] { return ac5(); }},
      {"AC6", "secant degree closed form = Segre oracle, g,d <= 6, m <= 40", [&] { return ac6(exec); }},
      {"AC7", "D(g,m,1) = m+2g-2 for g <= 10, 3 <= m <= 50", [] { return ac7(); }},
      {"AC8", "Prop 4 transference on 500 random + 3 named lattices", [&] { return ac8(opts.seed, exec); }},
      {"AC9", "Prop 5 grid avoidance on 200 random forms", [&] { return ac9(opts.seed, exec); }},
      {"AC10", "bound evaluator consistency (extremal e, cor2 disc coefficient)", [] { return ac10(); }},
      {"AC11", "asymptotic ratios for eqs (5) and (7), n <= 10^6", [&] { return ac11(get_sieve(), exec); }},
  };

  for (const auto& id : opts.only)
    require(std::any_of(entries.begin(), entries.end(), [&](const auto& e) { return e.id == id; }), "known criterion",
            "acceptance: unknown criterion '" + id + "'");

  std::vector<CriterionResult> results;
  for (const auto& e : entries) {
    if (!opts.only.empty() && std::find(opts.only.begin(), opts.only.end(), e.id) == opts.only.end()) continue;
    CriterionResult r;
    r.id = e.id;
    r.title = e.title;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = e.run();
      r.status = o.report_only ? CriterionStatus::report : o.ok ? CriterionStatus::pass : CriterionStatus::fail;
      r.detail = std::move(o.detail);
      r.info = std::move(o.info);
    } catch (const std::exception& ex) {
      r.status = CriterionStatus::fail;
      r.detail = std::string("exception: ") + ex.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace secmin
