#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "grothsp/constants.hpp"

namespace grothsp {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Builds a matrix from row-major entries. Throws InputError when the entry
/// count does not match or an entry is not finite.
Matrix from_row_major(std::size_t rows, std::size_t cols, std::span<const double> data);

/// Row-major copy of the entries of `a`.
std::vector<double> to_row_major(const Matrix& a);

/// Eigen-decomposition of a symmetric matrix.
///
/// `values` are sorted in non-increasing order and `vectors` holds the
/// matching orthonormal eigenvectors as columns, each normalized so that its
/// first non-negligible coordinate is positive.
struct SymEig {
  Vector values;
  Matrix vectors;
};

/// Throws InputError if `m` is not square or if ||M - M^T||_HS exceeds
/// tol * ||M||_HS. The symmetric part of `m` is decomposed.
SymEig sym_eig(const Matrix& m, double tol = 1e-10);

/// Singular values s_0 >= s_1 >= ... of `a`, padded with zeros to length
/// a.cols().
Vector singular_values(const Matrix& a);

struct SingularPair {
  double value = 0.0;
  Vector left;
  Vector right;
};

/// Largest singular value with a left/right singular vector pair
/// (a * right = value * left). For a zero matrix both vectors are e_0.
SingularPair top_singular_pair(const Matrix& a);

double hs_norm(const Matrix& a);
double spectral_norm(const Matrix& a);

/// #{j : s_j > tol * s_0}; zero for the zero matrix.
std::size_t numerical_rank(const Matrix& a, double tol = kDefaultRankTol);

struct SpectrumReport {
  std::vector<double> singular_values;
  std::size_t numerical_rank = 0;
  double hs_norm = 0.0;
  double spectral_norm = 0.0;
};

SpectrumReport spectrum_report(const Matrix& a, double tol = kDefaultRankTol);

/// Modified Gram-Schmidt (with one re-orthogonalization pass) over the rows
/// of `rows`, in order. Rows whose residual falls below tol times the largest
/// input row norm are dropped.
Matrix orthonormalize(const Matrix& rows, double tol = kDefaultRankTol);

/// Returns S with W = S V on the range of V and S = identity on its
/// orthogonal complement. Throws InputError on a shape mismatch and
/// ConsistencyError when ker V is not contained in ker W, detected as
/// ||W - S V||_HS > tol * (1 + ||W||_HS).
Matrix solve_right_factor(const Matrix& v, const Matrix& w, double tol = kDefaultRankTol);

struct HadamardCheck {
  double lhs = 0.0;  ///< det(P^T Q)
  double rhs = 0.0;  ///< product of column norms of P times that of Q
  bool holds = false;
};

/// Generalized Hadamard inequality det(P^T Q) <= Pi(P) Pi(Q) for k x l
/// matrices with l <= k.
HadamardCheck hadamard_bound_check(const Matrix& p, const Matrix& q);

/// Matrix exponential (scaling and squaring with Pade approximants).
Matrix matrix_exp(const Matrix& x);

/// D^{-1} A D^{-1} for D = diag(lambdas).
Matrix inverse_diagonal_scale(const Matrix& a, std::span<const double> lambdas);

}  // namespace grothsp
