#pragma once

#include <cstdint>
#include <vector>

#include "grothsp/constants.hpp"
#include "grothsp/linalg.hpp"

namespace grothsp {

/// Value of ||A||_{l_inf -> l_1} = max over sign vectors t, s of t^T A s.
struct InftyOneResult {
  double value = 0.0;
  std::vector<int> witness_t;  ///< length rows, entries +-1
  std::vector<int> witness_s;  ///< length cols, entries +-1
  bool exact = false;
};

/// Sum of |a_ij|.
double abs_sum(const Matrix& a);

/// t^T A s.
double bilinear(const Matrix& a, const std::vector<int>& t, const std::vector<int>& s);

/// Exact l_inf -> l_1 norm by enumerating the sign vectors of the smaller
/// side (after discarding all-zero rows and columns), with the first sign
/// fixed to +1. Among maximizers the lexicographically smallest enumerated
/// witness wins (-1 < +1), so results are deterministic.
///
/// Throws CapacityError when both sides exceed `limit`.
InftyOneResult infty_one_exact(const Matrix& a, std::size_t limit = kDefaultEnumerationLimit);

struct InftyOneBounds {
  double lower = 0.0;
  double upper = 0.0;
};

/// Heuristic bracket for sizes beyond enumeration. Block-coordinate ascent on
/// unit vectors of dimension `rank_param` (<= 0 picks ceil(sqrt(2 max(m, n))))
/// over 20 seeded restarts approximates the semidefinite relaxation; random
/// hyperplane rounding followed by alternating sign polishing gives `lower`.
/// `upper` is kg_upper times the relaxation value, capped by the rigorous
/// bounds abs_sum(A) and infty_one_upper_rigorous(A).
InftyOneBounds infty_one_bounds(const Matrix& a, int rank_param, int iters, std::uint64_t seed,
                                double kg_upper = kKgUpper);

/// sqrt(r * c) * s_0(A) where r, c count the non-zero rows and columns: a
/// valid upper bound on ||A||_{l_inf -> l_1} at any size.
double infty_one_upper_rigorous(const Matrix& a);

}  // namespace grothsp
