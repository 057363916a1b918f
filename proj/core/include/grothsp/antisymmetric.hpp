#pragma once

#include <cstddef>
#include <vector>

#include "grothsp/constants.hpp"
#include "grothsp/linalg.hpp"

namespace grothsp {

/// Real canonical form B = Q^T R Q of an antisymmetric N x N matrix.
///
/// R is block diagonal with blocks [[0, -mu_j], [mu_j, 0]] and Q stacks the
/// orthonormal row pairs (x_j, y_j), interleaved, with B x_j = mu_j y_j and
/// B y_j = -mu_j x_j.
struct AntisymCanonicalForm {
  std::vector<double> mus;  ///< non-increasing, all > 0
  Matrix q_rows;            ///< 2k x N
  std::size_t n_ambient = 0;

  std::size_t k() const { return mus.size(); }
  /// R, 2k x 2k.
  Matrix r_matrix() const;
  /// (sqrt mu_1, sqrt mu_1, ..., sqrt mu_k, sqrt mu_k), so R = D_M R0 D_M.
  Vector m_vector() const;
};

struct AntisymOptions {
  double tol = 1e-8;        ///< antisymmetry precondition, relative to ||B||_HS
  double rank_tol = kDefaultRankTol;  ///< mu below rank_tol * mu_max are dropped
  double group_tol = 1e-8;  ///< eigenvalues of -B^2 closer than this (relative) share a cluster
};

/// Throws InputError if B is not square or ||B + B^T||_HS > tol ||B||_HS.
AntisymCanonicalForm antisym_canonical(const Matrix& b, const AntisymOptions& options = {});

/// Q^T R Q.
Matrix reconstruct(const AntisymCanonicalForm& form);

/// Block-diagonal R0 with k blocks [[0, -1], [1, 0]].
Matrix block_rotation_generator(std::size_t k);

/// 2k x 2k permutation P with P^T J_{2k} P = R0: column 2j is e_j and column
/// 2j + 1 is e_{k + j} (0-based), taking the interleaved pair order to the
/// split order of J. Throws InputError for k < 1.
Matrix interleave_permutation(std::size_t k);

}  // namespace grothsp
