#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace secmin {

/// Evaluators work in extended precision; all integer sub-expressions
/// (secant degrees in particular) stay exact until the final logarithm.
using Real = long double;

struct NumberFieldData {
  std::uint64_t degree_over_q = 1;
  std::uint64_t r1 = 1;
  std::uint64_t r2 = 0;
  Real log_abs_disc = 0;

  /// Checks r1 + 2 r2 = [K:Q] and the discriminant sign rules.
  static NumberFieldData make(std::uint64_t degree, std::uint64_t r1, std::uint64_t r2, Real log_abs_disc);
  static NumberFieldData rationals() { return {}; }
  bool is_rationals() const { return degree_over_q == 1; }
};

/// Arithmetic surface data. L2 = L.L, L_omega = L.omega, omega2 = omega.omega
/// are arithmetic intersection numbers supplied by the caller.
struct SurfaceData {
  std::uint64_t g = 2;
  std::uint64_t m = 1;
  Real L2 = 0;
  Real L_omega = 0;
  Real omega2 = 0;
  NumberFieldData field;

  static SurfaceData make(std::uint64_t g, std::uint64_t m, Real L2, Real L_omega, Real omega2,
                          NumberFieldData field);
  /// L = omega^{(x) n}: m = 2(g-1)n, L2 = n^2 omega2, L_omega = n omega2.
  static SurfaceData omega_power(std::uint64_t g, std::uint64_t n, Real omega2, NumberFieldData field);
};

enum class BoundKind { prop6_e, thm4_lambda_i, thm4_mu, thm4_ii_odd, thm4_ii_even, cor1, cor2, c_constant };

const char* to_string(BoundKind k);
BoundKind bound_kind_from_string(const std::string& s);

/// Which unit-ball volumes enter C(N, K). `printed` uses B_N and B_{2N+2};
/// `shifted` uses B_{N+1} and B_{2N+2}.
enum class BallIndexing { printed, shifted };

/// A single evaluation together with everything needed to replay it.
struct BoundReport {
  BoundKind kind = BoundKind::prop6_e;
  Real value = 0;
  std::vector<std::pair<std::string, std::string>> inputs_echo;
  std::uint64_t index = 0;  // only for the part-ii bounds
};

/// log of the volume of the euclidean unit ball in R^n.
Real ball_volume_log(std::uint64_t n);

Real constant_C(std::uint64_t N, const NumberFieldData& field, BallIndexing balls = BallIndexing::printed);

/// g L^2 / (2m) - L.omega / 2 + m omega^2 / (8g); lower bound for e(L).
Real prop6_height_lower_bound(const SurfaceData& s);

/// log(D(g, m, d) (m + g)) [K:Q], with D exact; D(g, m, 0) = 1.
Real secant_log_term(const SurfaceData& s, std::uint64_t d);

/// Lower bound for lambda_k(L). Requires k > 1 and m > 2k.
Real thm4_lambda_bound(const SurfaceData& s, std::uint64_t k, Real e_val);
Real thm4_lambda_bound(const SurfaceData& s, std::uint64_t k);

/// Lower bound for mu_k(L). Requires k > 1 and m > 2k.
Real thm4_mu_bound(const SurfaceData& s, std::uint64_t k, Real e_val,
                   BallIndexing balls = BallIndexing::printed);
Real thm4_mu_bound(const SurfaceData& s, std::uint64_t k);

struct IndexedBound {
  std::uint64_t index = 0;
  Real value = 0;
  bool odd = false;
};

/// Part ii): index m-g-1 for odd m, m-g for even m. Requires index >= 1 and
/// the secant degree D(g, m, index-1) inside its dimension range.
IndexedBound thm4_part_ii_bound(const SurfaceData& s);

/// Exact precursor of Corollary 1 (bound on lambda_k + 1) for L = omega^n.
/// `s` supplies g, omega2 and the field. Requires k < (g-1) n.
Real cor1_exact(const SurfaceData& s, std::uint64_t n, std::uint64_t k);

/// thm4_mu_bound for L = omega^n with the prop6 surrogate for e(L).
/// Requires k < (g-1) n.
Real cor2_exact(const SurfaceData& s, std::uint64_t n, std::uint64_t k,
                BallIndexing balls = BallIndexing::printed);

// Reports carrying an input echo; evaluate_report() replays one.
BoundReport report_constant(std::uint64_t N, const NumberFieldData& field, BallIndexing balls = BallIndexing::printed);
BoundReport report_prop6(const SurfaceData& s);
BoundReport report_thm4_lambda(const SurfaceData& s, std::uint64_t k, Real e_val);
BoundReport report_thm4_mu(const SurfaceData& s, std::uint64_t k, Real e_val, BallIndexing balls = BallIndexing::printed);
BoundReport report_thm4_ii(const SurfaceData& s);
BoundReport report_cor1(const SurfaceData& s, std::uint64_t n, std::uint64_t k);
BoundReport report_cor2(const SurfaceData& s, std::uint64_t n, std::uint64_t k, BallIndexing balls = BallIndexing::printed);

/// Re-evaluates a report from its inputs_echo alone.
using EchoFields = std::vector<std::pair<std::string, std::string>>;
BoundReport evaluate_report(BoundKind kind, const EchoFields& inputs);

/// One line, fixed key order: kind, value, index (part ii only), then inputs.
std::string serialize(const BoundReport& r);
BoundReport parse_bound_report(const std::string& line);

/// Shortest decimal text that reads back to the same Real.
std::string format_real(Real x);
Real parse_real(const std::string& s);

}  // namespace secmin
