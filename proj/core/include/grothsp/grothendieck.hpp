#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grothsp/constants.hpp"
#include "grothsp/linalg.hpp"

namespace grothsp {

/// Strictly positive weights with Euclidean norm at most one; D_Lambda is the
/// diagonal matrix built from them.
class ScalingVector {
 public:
  ScalingVector() = default;

  /// Throws InputError unless every entry is > 0 and ||values||_2 <= 1 + 1e-12.
  explicit ScalingVector(std::vector<double> values);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double norm() const;

 private:
  std::vector<double> values_;
};

/// lambda_i = ((sqrt3 - sqrt2)/sqrt(n) + max(lambda0_i, lambda1_i)) / sqrt3.
///
/// Merges the two one-sided weight vectors of a Grothendieck factorization
/// into a single positive scaling. Inputs must be non-negative, of equal
/// length, with Euclidean norm at most one; the result then satisfies
/// ||Lambda|| <= 1 and lambda_i >= max(lambda0_i, lambda1_i) / sqrt3.
ScalingVector combine_scalings(std::span<const double> lambda0, std::span<const double> lambda1);

struct ScalingCertificate {
  ScalingVector lambda;
  double scaled_norm = 0.0;  ///< ||D^{-1} A D^{-1}||_{2->2}
  double infty_one = 0.0;    ///< ||A||_{inf->1}
  double kg_used = kKgUpper;
  bool certified = false;    ///< scaled_norm <= 3 kg infty_one + 1e-9
  std::size_t floored = 0;   ///< coordinates clamped to the positivity floor
  int best_restart = 0;
};

struct ScalingSearchOptions {
  int iters = 200;
  int restarts = 10;
  double step = 0.1;
  std::uint64_t seed = 0;
  double kg = kKgUpper;
  /// Known ||A||_{inf->1}; computed with infty_one_exact when absent.
  std::optional<double> infty_one;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

/// Searches for Lambda on the positive part of the unit sphere minimizing
/// ||D^{-1} A D^{-1}||_{2->2}.
///
/// Weights are parametrized as lambda = exp(theta) / ||exp(theta)||. Each
/// restart descends the spectral-norm subgradient
///   d/dtheta_m = s0 * (2 lambda_m^2 - u_m^2 - v_m^2)
/// (u, v the top singular pair of the scaled matrix) with a sup-normalized
/// step that halves whenever the objective does not improve. Restart 0 starts
/// from the uniform vector, restart 1 from row/column mass, the rest from
/// seeded perturbations; the lowest scaled norm wins, ties to the earlier
/// restart. Coordinates are floored at 1e-8 / sqrt(N) before inversion.
///
/// Throws InputError for a non-square or zero matrix.
ScalingCertificate scaling_search(const Matrix& a, const ScalingSearchOptions& options = {});

struct InequalityReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;  ///< lhs / rhs, 0 when rhs = 0
  bool holds = false;
  std::size_t rank = 0;
  double infty_one = 0.0;
  double kg_used = kKgUpper;
};

/// sum |a_ij| <= 3 kg sqrt(rank A) ||A||_{inf->1}, holding when
/// lhs <= rhs * (1 + tol).
InequalityReport theorem1_check(const Matrix& a, double kg = kKgUpper, double tol = 1e-9,
                                double rank_tol = kDefaultRankTol,
                                std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// For the columns v_1..v_N of `vectors` (in R^{2n}) checks
/// sum |<v_i, J v_j>| <= 3 kg sqrt(2n) max_{|t|,|s| <= 1} <sum t_i v_i, J sum s_j v_j>.
/// Throws InputError when the ambient dimension is odd.
InequalityReport corollary_check(const Matrix& vectors, double kg = kKgUpper, double tol = 1e-9,
                                 std::size_t enumeration_limit = kDefaultEnumerationLimit);

}  // namespace grothsp
