#include "secmin/bounds.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include "secmin/chow.hpp"
#include "secmin/errors.hpp"

namespace secmin {

namespace {

const Real kPi = std::acos(Real(-1));
const Real kLog2 = std::log(Real(2));

/// Natural log of a positive big integer using its top 64 bits.
Real log_big(const BigInt& x) {
  const std::size_t bits = mpz_sizeinbase(x.get_mpz_t(), 2);
  if (bits <= 64) return std::log(static_cast<Real>(mpz_get_ui(x.get_mpz_t())));
  BigInt top;
  mpz_fdiv_q_2exp(top.get_mpz_t(), x.get_mpz_t(), bits - 64);
  const auto hi = static_cast<Real>(mpz_get_ui(top.get_mpz_t()));
  return std::log(hi) + static_cast<Real>(bits - 64) * kLog2;
}

/// log(D(g, m, d) (m + g)).
Real log_secant(std::uint64_t g, std::uint64_t m, std::uint64_t d) {
  const BigInt D = secant_degree(g, m, d);
  require(sgn(D) > 0, "D(g,m,d) > 0", "secant degree vanishes; its logarithm is undefined");
  return log_big(D) + std::log(static_cast<Real>(m + g));
}

Real degK(const SurfaceData& s) { return static_cast<Real>(s.field.degree_over_q); }

/// The right-hand side of the mu_k inequality without the k > 1 restriction.
Real mu_formula(const SurfaceData& s, std::uint64_t k, Real e_val, BallIndexing balls) {
  const Real m = static_cast<Real>(s.m);
  const Real kk = static_cast<Real>(k);
  Real logs = 0;
  for (std::uint64_t j = 1; j <= k; ++j) logs += secant_log_term(s, j - 1);
  const Real bracket = kk * (kk + 1) / 2 * (s.L2 - 2 * m * e_val) + kk * m * m * e_val - logs;
  return -constant_C(s.m + s.g - 2, s.field, balls) + bracket / (m * m);
}

void check_thm4_i(const SurfaceData& s, std::uint64_t k) {
  require(k > 1, "k > 1", "theorem 4 i): requires k > 1");
  require(s.m > 2 * k, "m > 2k", "theorem 4 i): requires m > 2k");
}

void check_omega_power(const SurfaceData& s, std::uint64_t n, std::uint64_t k) {
  require(n >= 1, "n >= 1", "omega power: n must be positive");
  require(k >= 1, "k >= 1", "omega power: k must be positive");
  require(k < (s.g - 1) * n, "k < (g-1)n", "omega power: requires k < (g-1)n");
}

}  // namespace

NumberFieldData NumberFieldData::make(std::uint64_t degree, std::uint64_t r1, std::uint64_t r2, Real log_abs_disc) {
  require(degree >= 1, "[K:Q] >= 1", "field: degree must be positive");
  require(r1 + 2 * r2 == degree, "r1 + 2 r2 = [K:Q]", "field: r1 + 2 r2 must equal [K:Q]");
  require(std::isfinite(log_abs_disc) && log_abs_disc >= 0, "log|disc| >= 0", "field: log|disc| must be >= 0");
  require(degree == 1 || log_abs_disc > 0, "log|disc| > 0 for [K:Q] > 1",
          "field: only Q has discriminant 1");
  require(degree > 1 || log_abs_disc == 0, "log|disc| = 0 for Q", "field: Q has discriminant 1");
  return {degree, r1, r2, log_abs_disc};
}

SurfaceData SurfaceData::make(std::uint64_t g, std::uint64_t m, Real L2, Real L_omega, Real omega2,
                              NumberFieldData field) {
  require(g >= 2, "g >= 2", "surface: genus must be at least 2");
  require(m >= 1, "m >= 1", "surface: m must be positive");
  require(std::isfinite(L2) && std::isfinite(L_omega) && std::isfinite(omega2), "finite inputs",
          "surface: intersection numbers must be finite");
  require(omega2 >= 0, "omega^2 >= 0", "surface: omega^2 must be nonnegative");
  return {g, m, L2, L_omega, omega2, field};
}

SurfaceData SurfaceData::omega_power(std::uint64_t g, std::uint64_t n, Real omega2, NumberFieldData field) {
  require(g >= 2, "g >= 2", "surface: genus must be at least 2");
  require(n >= 1, "n >= 1", "omega power: n must be positive");
  const Real nn = static_cast<Real>(n);
  return make(g, 2 * (g - 1) * n, nn * nn * omega2, nn * omega2, omega2, field);
}

const char* to_string(BoundKind k) {
  switch (k) {
    case BoundKind::prop6_e: return "prop6_e";
    case BoundKind::thm4_lambda_i: return "thm4_lambda_i";
    case BoundKind::thm4_mu: return "thm4_mu";
    case BoundKind::thm4_ii_odd: return "thm4_ii_odd";
    case BoundKind::thm4_ii_even: return "thm4_ii_even";
    case BoundKind::cor1: return "cor1";
    case BoundKind::cor2: return "cor2";
    case BoundKind::c_constant: return "c_constant";
  }
  return "?";
}

BoundKind bound_kind_from_string(const std::string& s) {
  for (auto k : {BoundKind::prop6_e, BoundKind::thm4_lambda_i, BoundKind::thm4_mu, BoundKind::thm4_ii_odd,
                 BoundKind::thm4_ii_even, BoundKind::cor1, BoundKind::cor2, BoundKind::c_constant})
    if (s == to_string(k)) return k;
  throw ParseError("unknown bound kind '" + s + "'");
}

Real ball_volume_log(std::uint64_t n) {
  const Real half = static_cast<Real>(n) / 2;
  return half * std::log(kPi) - std::lgamma(half + 1);
}

Real constant_C(std::uint64_t N, const NumberFieldData& f, BallIndexing balls) {
  const Real n1 = static_cast<Real>(N + 1);
  const std::uint64_t real_ball = balls == BallIndexing::printed ? N : N + 1;
  return n1 * static_cast<Real>(f.r1 + f.r2) * kLog2 + n1 * f.log_abs_disc / 2 -
         static_cast<Real>(f.r1) * ball_volume_log(real_ball) -
         static_cast<Real>(f.r2) * ball_volume_log(2 * N + 2);
}

Real prop6_height_lower_bound(const SurfaceData& s) {
  const Real g = static_cast<Real>(s.g);
  const Real m = static_cast<Real>(s.m);
  return g * s.L2 / (2 * m) - s.L_omega / 2 + m * s.omega2 / (8 * g);
}

Real secant_log_term(const SurfaceData& s, std::uint64_t d) { return log_secant(s.g, s.m, d) * degK(s); }

Real thm4_lambda_bound(const SurfaceData& s, std::uint64_t k, Real e_val) {
  check_thm4_i(s, k);
  const Real m = static_cast<Real>(s.m);
  const Real kk = static_cast<Real>(k);
  const Real bracket = kk * (s.L2 - 2 * m * e_val) + m * m * e_val - secant_log_term(s, k - 1);
  return bracket / (m * m * degK(s)) - 1;
}

Real thm4_lambda_bound(const SurfaceData& s, std::uint64_t k) {
  return thm4_lambda_bound(s, k, prop6_height_lower_bound(s));
}

Real thm4_mu_bound(const SurfaceData& s, std::uint64_t k, Real e_val, BallIndexing balls) {
  check_thm4_i(s, k);
  return mu_formula(s, k, e_val, balls);
}

Real thm4_mu_bound(const SurfaceData& s, std::uint64_t k) {
  return thm4_mu_bound(s, k, prop6_height_lower_bound(s));
}

IndexedBound thm4_part_ii_bound(const SurfaceData& s) {
  IndexedBound out;
  out.odd = s.m % 2 == 1;
  const std::uint64_t drop = out.odd ? s.g + 1 : s.g;
  require(s.m >= drop + 1, "index >= 1",
          out.odd ? "theorem 4 ii): index m-g-1 must be at least 1" : "theorem 4 ii): index m-g must be at least 1");
  out.index = s.m - drop;
  const std::uint64_t d = out.index - 1;
  require(d == 0 || 2 * d <= s.m + s.g - 1, "2(index-1) <= m+g-1",
          "theorem 4 ii): D(g,m,index-1) is outside the secant dimension range (2d > m+g-1)");
  const Real m = static_cast<Real>(s.m);
  out.value = (s.L2 - secant_log_term(s, d)) / (2 * m * degK(s)) - 1;
  return out;
}

Real cor1_exact(const SurfaceData& s, std::uint64_t n, std::uint64_t k) {
  check_omega_power(s, n, k);
  const std::uint64_t m = 2 * (s.g - 1) * n;
  const Real g = static_cast<Real>(s.g);
  const Real mm = static_cast<Real>(m);
  return static_cast<Real>(k + n) / (4 * g * (g - 1)) * (s.omega2 / degK(s)) - log_secant(s.g, m, k - 1) / (mm * mm);
}

Real cor2_exact(const SurfaceData& s, std::uint64_t n, std::uint64_t k, BallIndexing balls) {
  check_omega_power(s, n, k);
  const auto L = SurfaceData::omega_power(s.g, n, s.omega2, s.field);
  return mu_formula(L, k, prop6_height_lower_bound(L), balls);
}

// ---------------------------------------------------------------------------
// Reports

std::string format_real(Real x) {
  char buf[64];
  for (int digits = 1; digits < std::numeric_limits<Real>::max_digits10; ++digits) {
    std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
    if (std::strtold(buf, nullptr) == x) return buf;
  }
  std::snprintf(buf, sizeof buf, "%.*Lg", std::numeric_limits<Real>::max_digits10, x);
  return buf;
}

Real parse_real(const std::string& s) {
  char* end = nullptr;
  const Real v = std::strtold(s.c_str(), &end);
  if (end == s.c_str() || *end != '\0') throw ParseError("not a real number: '" + s + "'");
  return v;
}

namespace {

const char* balls_name(BallIndexing b) { return b == BallIndexing::printed ? "printed" : "shifted"; }

BallIndexing balls_from(const std::string& s) {
  if (s == "printed") return BallIndexing::printed;
  if (s == "shifted") return BallIndexing::shifted;
  throw ParseError("unknown ball indexing '" + s + "'");
}

void echo_field(EchoFields& e, const NumberFieldData& f) {
  e.emplace_back("degK", std::to_string(f.degree_over_q));
  e.emplace_back("r1", std::to_string(f.r1));
  e.emplace_back("r2", std::to_string(f.r2));
  e.emplace_back("logdisc", format_real(f.log_abs_disc));
}

void echo_surface(EchoFields& e, const SurfaceData& s) {
  e.emplace_back("g", std::to_string(s.g));
  e.emplace_back("m", std::to_string(s.m));
  e.emplace_back("L2", format_real(s.L2));
  e.emplace_back("Lw", format_real(s.L_omega));
  e.emplace_back("w2", format_real(s.omega2));
  echo_field(e, s.field);
}

const std::string& lookup(const EchoFields& e, const std::string& key) {
  for (const auto& [k, v] : e)
    if (k == key) return v;
  throw ParseError("bound report missing key '" + key + "'");
}

std::uint64_t lookup_uint(const EchoFields& e, const std::string& key) {
  const auto& v = lookup(e, key);
  char* end = nullptr;
  const auto x = std::strtoull(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || v[0] == '-') throw ParseError("key '" + key + "' is not a nonnegative integer");
  return x;
}

NumberFieldData field_from(const EchoFields& e) {
  return NumberFieldData::make(lookup_uint(e, "degK"), lookup_uint(e, "r1"), lookup_uint(e, "r2"),
                               parse_real(lookup(e, "logdisc")));
}

SurfaceData surface_from(const EchoFields& e) {
  return SurfaceData::make(lookup_uint(e, "g"), lookup_uint(e, "m"), parse_real(lookup(e, "L2")),
                           parse_real(lookup(e, "Lw")), parse_real(lookup(e, "w2")), field_from(e));
}

}  // namespace

BoundReport report_constant(std::uint64_t N, const NumberFieldData& field, BallIndexing balls) {
  BoundReport r;
  r.kind = BoundKind::c_constant;
  r.value = constant_C(N, field, balls);
  r.inputs_echo.emplace_back("N", std::to_string(N));
  echo_field(r.inputs_echo, field);
  r.inputs_echo.emplace_back("balls", balls_name(balls));
  return r;
}

BoundReport report_prop6(const SurfaceData& s) {
  BoundReport r;
  r.kind = BoundKind::prop6_e;
  r.value = prop6_height_lower_bound(s);
  echo_surface(r.inputs_echo, s);
  return r;
}

BoundReport report_thm4_lambda(const SurfaceData& s, std::uint64_t k, Real e_val) {
  BoundReport r;
  r.kind = BoundKind::thm4_lambda_i;
  r.value = thm4_lambda_bound(s, k, e_val);
  echo_surface(r.inputs_echo, s);
  r.inputs_echo.emplace_back("k", std::to_string(k));
  r.inputs_echo.emplace_back("e", format_real(e_val));
  return r;
}

BoundReport report_thm4_mu(const SurfaceData& s, std::uint64_t k, Real e_val, BallIndexing balls) {
  BoundReport r;
  r.kind = BoundKind::thm4_mu;
  r.value = thm4_mu_bound(s, k, e_val, balls);
  echo_surface(r.inputs_echo, s);
  r.inputs_echo.emplace_back("k", std::to_string(k));
  r.inputs_echo.emplace_back("e", format_real(e_val));
  r.inputs_echo.emplace_back("balls", balls_name(balls));
  return r;
}

BoundReport report_thm4_ii(const SurfaceData& s) {
  const auto b = thm4_part_ii_bound(s);
  BoundReport r;
  r.kind = b.odd ? BoundKind::thm4_ii_odd : BoundKind::thm4_ii_even;
  r.value = b.value;
  r.index = b.index;
  echo_surface(r.inputs_echo, s);
  return r;
}

BoundReport report_cor1(const SurfaceData& s, std::uint64_t n, std::uint64_t k) {
  BoundReport r;
  r.kind = BoundKind::cor1;
  r.value = cor1_exact(s, n, k);
  r.inputs_echo.emplace_back("g", std::to_string(s.g));
  r.inputs_echo.emplace_back("n", std::to_string(n));
  r.inputs_echo.emplace_back("k", std::to_string(k));
  r.inputs_echo.emplace_back("w2", format_real(s.omega2));
  echo_field(r.inputs_echo, s.field);
  return r;
}

BoundReport report_cor2(const SurfaceData& s, std::uint64_t n, std::uint64_t k, BallIndexing balls) {
  BoundReport r;
  r.kind = BoundKind::cor2;
  r.value = cor2_exact(s, n, k, balls);
  r.inputs_echo.emplace_back("g", std::to_string(s.g));
  r.inputs_echo.emplace_back("n", std::to_string(n));
  r.inputs_echo.emplace_back("k", std::to_string(k));
  r.inputs_echo.emplace_back("w2", format_real(s.omega2));
  echo_field(r.inputs_echo, s.field);
  r.inputs_echo.emplace_back("balls", balls_name(balls));
  return r;
}

BoundReport evaluate_report(BoundKind kind, const EchoFields& e) {
  switch (kind) {
    case BoundKind::c_constant:
      return report_constant(lookup_uint(e, "N"), field_from(e), balls_from(lookup(e, "balls")));
    case BoundKind::prop6_e:
      return report_prop6(surface_from(e));
    case BoundKind::thm4_lambda_i:
      return report_thm4_lambda(surface_from(e), lookup_uint(e, "k"), parse_real(lookup(e, "e")));
    case BoundKind::thm4_mu:
      return report_thm4_mu(surface_from(e), lookup_uint(e, "k"), parse_real(lookup(e, "e")),
                            balls_from(lookup(e, "balls")));
    case BoundKind::thm4_ii_odd:
    case BoundKind::thm4_ii_even:
      return report_thm4_ii(surface_from(e));
    case BoundKind::cor1:
    case BoundKind::cor2: {
      const std::uint64_t g = lookup_uint(e, "g");
      const Real w2 = parse_real(lookup(e, "w2"));
      // Only g, omega^2 and the field are read by the corollary evaluators.
      const auto s = SurfaceData::make(g, 1, 0, 0, w2, field_from(e));
      if (kind == BoundKind::cor1) return report_cor1(s, lookup_uint(e, "n"), lookup_uint(e, "k"));
      return report_cor2(s, lookup_uint(e, "n"), lookup_uint(e, "k"), balls_from(lookup(e, "balls")));
    }
  }
  throw ParseError("unknown bound kind");
}

std::string serialize(const BoundReport& r) {
  std::ostringstream os;
  os << "kind=" << to_string(r.kind) << " value=" << format_real(r.value);
  if (r.kind == BoundKind::thm4_ii_odd || r.kind == BoundKind::thm4_ii_even) os << " index=" << r.index;
  for (const auto& [k, v] : r.inputs_echo) os << ' ' << k << '=' << v;
  return os.str();
}

BoundReport parse_bound_report(const std::string& line) {
  std::istringstream is(line);
  std::string tok;
  BoundReport r;
  bool have_kind = false, have_value = false;
  while (is >> tok) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("bound report token without '=': '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "kind") {
      r.kind = bound_kind_from_string(val);
      have_kind = true;
    } else if (key == "value") {
      r.value = parse_real(val);
      have_value = true;
    } else if (key == "index") {
      r.index = std::stoull(val);
    } else {
      r.inputs_echo.emplace_back(std::move(key), std::move(val));
    }
  }
  if (!have_kind || !have_value) throw ParseError("bound report needs kind= and value=");
  return r;
}

}  // namespace secmin
