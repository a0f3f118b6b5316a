#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "secmin/arith.hpp"
#include "secmin/bounds.hpp"
#include "secmin/exec.hpp"

namespace secmin {

using IntVec = std::vector<std::int64_t>;

inline constexpr std::size_t kMaxMinimaRank = 6;
inline constexpr std::size_t kMaxHeightsRank = 4;

/// Full-rank lattice given by a positive definite integer Gram matrix.
class GramLattice {
 public:
  /// Row-major entries; throws PreconditionError unless symmetric positive
  /// definite (all leading principal minors > 0) of rank 1..6.
  static GramLattice make(std::size_t rank, std::vector<std::int64_t> entries);
  static GramLattice identity(std::size_t rank);

  std::size_t rank() const { return rank_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return gram_[i * rank_ + j]; }
  const std::vector<std::int64_t>& entries() const { return gram_; }
  const BigInt& det() const { return det_; }
  /// log sqrt(det).
  double log_covolume() const;
  /// v^T G v, exact.
  BigInt norm_sq(const IntVec& v) const;
  /// Integer adjugate det(G) G^{-1}: the dual lattice scaled by sqrt(det G).
  GramLattice adjugate() const;

  friend bool operator==(const GramLattice& a, const GramLattice& b) { return a.gram_ == b.gram_; }

 private:
  GramLattice(std::size_t rank, std::vector<std::int64_t> g, BigInt det)
      : rank_(rank), gram_(std::move(g)), det_(std::move(det)) {}
  std::size_t rank_;
  std::vector<std::int64_t> gram_;
  BigInt det_;
};

/// Square matrix of exact rationals, row-major.
struct RationalGram {
  std::size_t rank = 0;
  std::vector<Rational> entries;

  static RationalGram from(const GramLattice& l);
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries[i * rank + j]; }
  friend bool operator==(const RationalGram& a, const RationalGram& b) {
    return a.rank == b.rank && a.entries == b.entries;
  }
};

/// Exact inverse; throws PreconditionError for a singular matrix.
RationalGram inverse(const RationalGram& m);

/// Determinant of a square BigInt matrix (fraction-free elimination).
BigInt determinant(std::vector<BigInt> m, std::size_t n);

struct ShortVector {
  IntVec coords;
  std::int64_t norm_sq = 0;
};

/// All nonzero v with v^T G v <= radius_sq, one of each +-v pair (first
/// nonzero coordinate positive), sorted by (norm, coordinates). Throws
/// BudgetExceeded when more than `budget` vectors would be produced.
std::vector<ShortVector> enumerate_short_vectors(const GramLattice& l, std::int64_t radius_sq,
                                                 std::size_t budget = 4'000'000, Exec exec = Exec::parallel);

struct MinimaProfile {
  GramLattice lattice;
  std::vector<double> log_minima;      // nondecreasing
  std::vector<std::int64_t> norms_sq;  // exact squared norms of the witnesses
  std::vector<IntVec> witnesses;
};

MinimaProfile successive_minima(const GramLattice& l, Exec exec = Exec::parallel);

/// Product of squared minima <= (2^n / B_n)^2 det(G).
bool minkowski_second_holds(const MinimaProfile& p);

RationalGram dual_lattice(const GramLattice& l);

struct SublatticeHeightTable {
  GramLattice lattice;
  std::vector<double> heights;        // heights[p-1] = l_p, p = 1..rank
  std::vector<Rational> covolume_sq;  // exact minimal squared covolumes
};

/// l_p = min log covolume over primitive rank-p sublattices. Rank <= 4.
SublatticeHeightTable sublattice_heights(const GramLattice& l, Exec exec = Exec::parallel);

/// Squared covolume of the saturation of the span of `basis` (assumed
/// independent); zero if dependent.
Rational saturated_covolume_sq(const GramLattice& l, const std::vector<IntVec>& basis);

struct Prop4Row {
  std::size_t p = 0;
  double minima_sum = 0;        // sum_{j<=p} lambda_j(V)
  double dual_height = 0;       // projective height l_{N+1-p}(V*)
  double dual_height_raw = 0;   // min log covolume of rank N+1-p sublattices of V*
  double constant = 0;          // C(N, Q)
  double lower_slack = 0;       // minima_sum - dual_height
  double upper_slack = 0;       // constant + dual_height - minima_sum
  bool holds = false;
};

struct Prop4Report {
  GramLattice lattice;
  MinimaProfile minima;
  std::vector<Prop4Row> rows;
  bool all_hold = false;
};

inline constexpr double kLogTolerance = 1e-9;

/// Checks both transference inequalities for every p over Q. Throws
/// TheoremViolation on failure, PreconditionError for non-rational fields
/// or rank > 4.
Prop4Report verify_prop4(const GramLattice& l, const NumberFieldData& field = NumberFieldData::rationals(),
                         BallIndexing balls = BallIndexing::printed, Exec exec = Exec::parallel);

/// F(X) = sum_alpha r_alpha X^alpha, all |alpha| = degree.
class HomogeneousForm {
 public:
  using Exponent = std::vector<std::uint32_t>;

  /// Merges repeated exponents, drops zero coefficients; throws
  /// PreconditionError for mixed degrees, wrong arity or an all-zero form.
  static HomogeneousForm make(std::size_t num_vars, const std::vector<std::pair<Exponent, BigInt>>& terms);

  std::size_t num_vars() const { return num_vars_; }
  std::uint32_t degree() const { return degree_; }
  const std::map<Exponent, BigInt>& terms() const { return terms_; }

 private:
  std::size_t num_vars_ = 0;
  std::uint32_t degree_ = 0;
  std::map<Exponent, BigInt> terms_;
};

BigInt evaluate_form(const HomogeneousForm& f, const IntVec& v);

struct AvoidResult {
  IntVec grid_coeffs;  // n_i in [0, D], coordinates in the minima basis
  IntVec vector;       // sum n_i e_i in lattice coordinates
  BigInt form_value;   // F(vector) != 0
  double log_norm = 0;
  double log_bound = 0;  // lambda_max + log(D (N+1))
  bool bound_holds = false;
};

/// First grid point (lexicographic, nonzero) off the hypersurface F = 0, in
/// the basis of minima witnesses. Throws TheoremViolation if the whole grid
/// vanishes.
AvoidResult avoid_hypersurface(const HomogeneousForm& f, const MinimaProfile& minima);

// Plain-text formats. Gram: rank, then rank rows of rank integers.
// Form: one term per line, "coeff e1 e2 ... e{N+1}". '#' starts a comment.
GramLattice parse_gram(const std::string& text);
HomogeneousForm parse_form(const std::string& text);
std::string format_gram(const GramLattice& l);

namespace kernels {
namespace serial {
std::vector<ShortVector> enumerate(const GramLattice& l, std::int64_t radius_sq, std::size_t budget);
std::vector<Prop4Report> prop4_batch(const std::vector<GramLattice>& lattices, BallIndexing balls);
}  // namespace serial
namespace omp {
std::vector<ShortVector> enumerate(const GramLattice& l, std::int64_t radius_sq, std::size_t budget);
std::vector<Prop4Report> prop4_batch(const std::vector<GramLattice>& lattices, BallIndexing balls);
}  // namespace omp
}  // namespace kernels

}  // namespace secmin
