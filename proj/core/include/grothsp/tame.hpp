#pragma once

#include <cstddef>

#include "grothsp/grothendieck.hpp"
#include "grothsp/symplectic.hpp"

namespace grothsp {

struct TameOptions {
  double kg = kKgUpper;
  double eps = 1e-6;
  double rank_tol = kDefaultRankTol;
  /// Relative residual allowed for W = S0 V0 on the reduced space.
  double kernel_tol = 1e-7;
  ScalingSearchOptions search;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

enum class TameCase { full_rank, degenerate };

/// A symplectic map reducing sum_i ||S v_i|| together with the certified
/// bound sqrt(3 kg rank(A) ||A||_{inf->1}).
///
/// When l > 0 the infimum is not attained and the map is the family
///   S_eps = (S0 pi0 + eps pi1 + eps^{-1} pi2 + pi3) T;
/// `s_matrix` holds it at the requested eps and `s_at` rebuilds it for any
/// other eps > 0. For l = 0 it does not depend on eps.
struct TameResult {
  TameCase case_tag = TameCase::full_rank;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::size_t rank = 0;
  double eps = 0.0;
  double infty_one = 0.0;     ///< ||A||_{inf->1} of the input family
  double scale = 1.0;         ///< factor applied to the vectors so that ||A'||_{inf->1} = 1

  Matrix t;                   ///< normalizing symplectic map
  Matrix s0;                  ///< 2k x 2k map on E0 (normalized coordinates)
  Matrix w_matrix;            ///< W = P D_M Q D_Lambda, 2k x N, for the rescaled family
  Matrix s_matrix;            ///< S at `eps`

  ScalingCertificate scaling;  ///< empty lambda when k = 0
  bool certified = true;

  double achieved_sum = 0.0;     ///< sum ||S v_i|| at eps
  double limit_sum = 0.0;        ///< eps -> 0 limit, sum ||S0 pi0 T v_i||
  double isotropic_mass = 0.0;   ///< sum ||pi1 T v_i||
  double normalized_mass = 0.0;  ///< sum ||T v_i||
  double certified_bound = 0.0;  ///< sqrt(3 kg rank ||A||)
  double empirical_bound = 0.0;  ///< sqrt(scaled_norm rank ||A||)
  double symplectic_residual = 0.0;
  /// Round-off in the E2 coordinates of T v_i is multiplied by 1 / eps:
  /// 2n * unit roundoff * ||T|| * sum ||v_i|| / eps bounds that contribution.
  double roundoff_allowance = 0.0;

  Matrix s_at(double eps) const;
};

/// Runs the construction on `family`:
///  1. rescale the vectors so that ||A||_{inf->1} = 1;
///  2. normalize E = span{v_i} by T and project onto E0 (pi0);
///  3. on E0: scaling search, B = D^{-1} A D^{-1}, canonical form
///     B = Q^T R Q, W = P D_M Q D_Lambda and S0 with W = S0 V0;
///  4. assemble S_eps through T.
/// An all-zero pairing skips steps 1 and 3. Throws InputError for eps <= 0
/// and ConsistencyError when the reduced ranks or kernels do not match.
TameResult tame(const VectorFamily& family, const TameOptions& options = {});

}  // namespace grothsp
