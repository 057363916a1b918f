#include "grothsp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "grothsp/errors.hpp"

namespace grothsp {

namespace {

// Flip `v` so its first coordinate with |v_i| > 1e-12 * ||v|| is positive.
void canonical_sign(Eigen::Ref<Vector> v) {
  const double scale = v.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > 1e-12 * scale) {
      if (v(i) < 0.0) v = -v;
      return;
    }
  }
}

}  // namespace

Matrix from_row_major(std::size_t rows, std::size_t cols, std::span<const double> data) {
  if (data.size() != rows * cols) {
    throw InputError("matrix data has " + std::to_string(data.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  Matrix out(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const double x = data[i * cols + j];
      if (!std::isfinite(x)) throw InputError("matrix entry is not finite");
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = x;
    }
  }
  return out;
}

std::vector<double> to_row_major(const Matrix& a) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) out.push_back(a(i, j));
  return out;
}

SymEig sym_eig(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw InputError("sym_eig: matrix is not square");
  const double scale = m.norm();
  if ((m - m.transpose()).norm() > tol * scale) {
    throw InputError("sym_eig: matrix is not symmetric within tolerance");
  }
  const Eigen::Index n = m.rows();
  SymEig out{Vector::Zero(n), Matrix::Identity(n, n)};
  if (n == 0 || scale == 0.0) return out;

  const Matrix sym = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(sym);
  if (solver.info() != Eigen::Success) throw ConsistencyError("sym_eig: eigensolver failed");

  // Eigen returns ascending order; a stable sort keeps ties deterministic.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.values(j) = solver.eigenvalues()(src);
    out.vectors.col(j) = solver.eigenvectors().col(src);
    canonical_sign(out.vectors.col(j));
  }
  return out;
}

Vector singular_values(const Matrix& a) {
  Vector out = Vector::Zero(a.cols());
  if (a.size() == 0) return out;
  Eigen::JacobiSVD<Matrix> svd(a);
  const Vector& s = svd.singularValues();
  out.head(s.size()) = s;
  return out;
}

SingularPair top_singular_pair(const Matrix& a) {
  SingularPair out;
  out.left = Vector::Zero(a.rows());
  out.right = Vector::Zero(a.cols());
  if (a.rows() > 0) out.left(0) = 1.0;
  if (a.cols() > 0) out.right(0) = 1.0;
  if (a.size() == 0) return out;
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  out.value = svd.singularValues()(0);
  if (out.value == 0.0) return out;
  out.left = svd.matrixU().col(0);
  out.right = svd.matrixV().col(0);
  return out;
}

double hs_norm(const Matrix& a) { return a.norm(); }

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return singular_values(a)(0);
}

std::size_t numerical_rank(const Matrix& a, double tol) {
  const Vector s = singular_values(a);
  if (s.size() == 0 || s(0) == 0.0) return 0;
  const double cut = tol * s(0);
  return static_cast<std::size_t>((s.array() > cut).count());
}

SpectrumReport spectrum_report(const Matrix& a, double tol) {
  SpectrumReport out;
  const Vector s = singular_values(a);
  out.singular_values.assign(s.data(), s.data() + s.size());
  out.spectral_norm = s.size() > 0 ? s(0) : 0.0;
  if (out.spectral_norm > 0.0) {
    out.numerical_rank = static_cast<std::size_t>((s.array() > tol * out.spectral_norm).count());
  }
  out.hs_norm = hs_norm(a);
  return out;
}

Matrix orthonormalize(const Matrix& rows, double tol) {
  const Eigen::Index cols = rows.cols();
  double max_norm = 0.0;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) max_norm = std::max(max_norm, rows.row(i).norm());
  std::vector<Vector> kept;
  if (max_norm == 0.0) return Matrix(0, cols);
  const double cut = tol * max_norm;
  for (Eigen::Index i = 0; i < rows.rows(); ++i) {
    Vector r = rows.row(i).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& q : kept) r -= q.dot(r) * q;
    }
    const double nr = r.norm();
    if (nr > cut) kept.push_back(r / nr);
  }
  Matrix out(static_cast<Eigen::Index>(kept.size()), cols);
  for (std::size_t i = 0; i < kept.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = kept[i].transpose();
  return out;
}

Matrix solve_right_factor(const Matrix& v, const Matrix& w, double tol) {
  if (v.rows() != w.rows() || v.cols() != w.cols()) {
    throw InputError("solve_right_factor: V and W must have the same shape");
  }
  const Eigen::Index d = v.rows();
  Matrix s = Matrix::Identity(d, d);
  if (v.size() == 0) return s;

  Eigen::JacobiSVD<Matrix> svd(v, Eigen::ComputeFullU | Eigen::ComputeThinV);
  const Vector& sigma = svd.singularValues();
  Eigen::Index r = 0;
  if (sigma(0) > 0.0) {
    while (r < sigma.size() && sigma(r) > tol * sigma(0)) ++r;
  }
  const Matrix ur = svd.matrixU().leftCols(r);
  const Matrix yr = svd.matrixV().leftCols(r);
  // V^+ = Y_r diag(1/sigma) U_r^T
  const Matrix pinv = yr * sigma.head(r).cwiseInverse().asDiagonal() * ur.transpose();
  s = w * pinv + (Matrix::Identity(d, d) - ur * ur.transpose());

  const double residual = (w - s * v).norm();
  if (residual > tol * (1.0 + w.norm())) {
    throw ConsistencyError("solve_right_factor: ker V is not contained in ker W (residual " +
                           std::to_string(residual) + ")");
  }
  return s;
}

HadamardCheck hadamard_bound_check(const Matrix& p, const Matrix& q) {
  if (p.rows() != q.rows() || p.cols() != q.cols()) {
    throw InputError("hadamard_bound_check: P and Q must have the same shape");
  }
  if (p.cols() > p.rows()) throw InputError("hadamard_bound_check: requires l <= k for k x l input");
  HadamardCheck out;
  out.lhs = p.cols() == 0 ? 1.0 : (p.transpose() * q).determinant();
  out.rhs = 1.0;
  for (Eigen::Index j = 0; j < p.cols(); ++j) out.rhs *= p.col(j).norm() * q.col(j).norm();
  out.holds = out.lhs <= out.rhs + 1e-10;
  return out;
}

Matrix matrix_exp(const Matrix& x) {
  if (x.rows() != x.cols()) throw InputError("matrix_exp: matrix is not square");
  if (x.size() == 0) return x;
  return x.exp();
}

Matrix inverse_diagonal_scale(const Matrix& a, std::span<const double> lambdas) {
  if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != lambdas.size()) {
    throw InputError("inverse_diagonal_scale: dimension mismatch");
  }
  Matrix out = a;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) /= lambdas[static_cast<std::size_t>(i)] * lambdas[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace grothsp
