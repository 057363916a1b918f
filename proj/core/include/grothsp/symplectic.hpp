#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "grothsp/constants.hpp"
#include "grothsp/linalg.hpp"

namespace grothsp {

/// R^{2n} with the complex structure J (orthogonal, J^2 = -I).
struct SymplecticSpace {
  std::size_t half_dim = 0;
  Matrix j;
};

/// J = [[0, -I_n], [I_n, 0]]: J e_i = e_{n+i}, J e_{n+i} = -e_i.
/// Throws InputError for n < 1.
SymplecticSpace standard_J(std::size_t n);

struct SymplecticCheck {
  double residual = 0.0;  ///< ||S^T J S - J||_HS
  bool holds = false;
};

SymplecticCheck is_symplectic(const Matrix& s, const SymplecticSpace& space, double tol = 1e-8);

/// Vectors v_1..v_N in R^{2n}, stored as the columns of a 2n x N matrix.
struct VectorFamily {
  SymplecticSpace ambient;
  Matrix columns;

  std::size_t size() const { return static_cast<std::size_t>(columns.cols()); }
};

/// Wraps `columns` in the standard space of matching dimension. Throws
/// InputError for an odd or empty ambient dimension or zero columns.
VectorFamily make_family(Matrix columns);

/// a_ij = <v_i, J v_j>, i.e. V^T J V.
Matrix pairing_matrix(const VectorFamily& family);
Matrix pairing_matrix(const Matrix& columns, const Matrix& j);

/// Columns become S v_i. Throws InputError when S is not symplectic to `tol`.
VectorFamily symplectic_transform(const VectorFamily& family, const Matrix& s, double tol = 1e-8);

/// Normalizing symplectic map for E = span{v_i}.
///
/// With 2k the rank of the form restricted to E and l = dim E - 2k its
/// isotropic kernel, T maps E onto span{e_1..e_k, e_{n+1}..e_{n+k+l}}. The
/// projections are the coordinate projections onto
///   E0 = span{e_1..e_k, e_{n+1}..e_{n+k}}     E1 = span{e_{n+k+1}..e_{n+k+l}}
///   E2 = span{e_{k+1}..e_{k+l}}               E3 = the remaining coordinates
/// (1-based indices, as in the usual statement of the normal form).
struct IsotropicSplit {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  Matrix t;
  std::array<Matrix, 4> projections;

  /// 0-based coordinates of E0 in normalized space, in the order
  /// e_1..e_k, e_{n+1}..e_{n+k}: J restricted to them is J_{2k}.
  std::vector<Eigen::Index> e0_coordinates() const;
};

/// Builds T from a symplectic basis adapted to E.
///
/// An orthonormal basis U of E gives the restricted form G = U^T J U; its
/// canonical form yields k symplectic pairs inside E and an orthonormal basis
/// c_1..c_l of the kernel. Each c_j is completed by the partner -J c_j,
/// projected off the pairs found so far and corrected along the c's so the
/// partners are mutually isotropic. The symplectic complement of everything
/// chosen is split the same way. T is the inverse of the basis matrix.
IsotropicSplit symplectic_basis_extension(const VectorFamily& family, double tol = kDefaultRankTol);

/// exp(J H) for a random symmetric H with N(0, scale^2) entries.
Matrix random_symplectic(std::size_t n, double scale, std::uint64_t seed);

/// 2m x 2m orthogonal matrix with blocks
/// (1/sqrt m) [[cos(2 pi j l / m), -sin(2 pi j l / m)], [sin, cos]], j, l = 1..m.
/// Every entry is bounded by sqrt2 / sqrt(2m). Throws InputError for m < 1.
Matrix fourier_orthogonal(std::size_t m);

/// e_1..e_m, e_{n+1}..e_{n+m} in R^{2n} followed by N - 2m zero vectors.
/// Throws InputError unless 1 <= m <= n and N >= 2m.
VectorFamily example2_vectors(std::size_t n, std::size_t m, std::size_t count);

}  // namespace grothsp
