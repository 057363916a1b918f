#include "grothsp/antisymmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grothsp/errors.hpp"

namespace grothsp {

Matrix AntisymCanonicalForm::r_matrix() const {
  const auto dim = static_cast<Eigen::Index>(2 * k());
  Matrix r = Matrix::Zero(dim, dim);
  for (std::size_t j = 0; j < k(); ++j) {
    const auto p = static_cast<Eigen::Index>(2 * j);
    r(p, p + 1) = -mus[j];
    r(p + 1, p) = mus[j];
  }
  return r;
}

Vector AntisymCanonicalForm::m_vector() const {
  Vector m(static_cast<Eigen::Index>(2 * k()));
  for (std::size_t j = 0; j < k(); ++j) {
    const double root = std::sqrt(mus[j]);
    m(static_cast<Eigen::Index>(2 * j)) = root;
    m(static_cast<Eigen::Index>(2 * j + 1)) = root;
  }
  return m;
}

AntisymCanonicalForm antisym_canonical(const Matrix& b, const AntisymOptions& options) {
  if (b.rows() != b.cols()) throw InputError("antisym_canonical: matrix is not square");
  const Eigen::Index n = b.rows();
  AntisymCanonicalForm form;
  form.n_ambient = static_cast<std::size_t>(n);
  form.q_rows = Matrix(0, n);

  const double scale = b.norm();
  if ((b + b.transpose()).norm() > options.tol * scale) {
    throw InputError("antisym_canonical: matrix is not antisymmetric within tolerance");
  }
  if (scale == 0.0) return form;

  const Matrix skew = 0.5 * (b - b.transpose());
  const Matrix gram = skew.transpose() * skew;  // = -B^2, positive semidefinite
  const SymEig eig = sym_eig(0.5 * (gram + gram.transpose()));

  std::vector<double> norms(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) norms[static_cast<std::size_t>(j)] = (skew * eig.vectors.col(j)).norm();
  const double mu_max = *std::max_element(norms.begin(), norms.end());
  const double cut = options.rank_tol * mu_max;
  const double group_cut = options.group_tol * eig.values(0);

  struct Pair {
    Vector x, y;
  };
  std::vector<Pair> pairs;

  Eigen::Index start = 0;
  while (start < n && norms[static_cast<std::size_t>(start)] > cut) {
    Eigen::Index end = start + 1;
    while (end < n && norms[static_cast<std::size_t>(end)] > cut &&
           eig.values(end - 1) - eig.values(end) <= group_cut) {
      ++end;
    }
    // Deflate the eigenspace of -B^2 one invariant plane span{x, Bx} at a time.
    Matrix cluster = eig.vectors.middleCols(start, end - start);
    while (cluster.cols() > 0) {
      const Vector x = cluster.col(0).normalized();
      Vector y = skew * x;
      const double mu = y.norm();
      if (mu <= cut) break;
      y /= mu;
      pairs.push_back({x, y});
      const Matrix rest = cluster - x * (x.transpose() * cluster) - y * (y.transpose() * cluster);
      if (rest.cols() <= 1) break;
      Eigen::JacobiSVD<Matrix> svd(rest, Eigen::ComputeThinU);
      const Eigen::Index keep = (svd.singularValues().array() > 0.5).count();
      cluster = svd.matrixU().leftCols(keep);
    }
    start = end;
  }

  const auto k = static_cast<Eigen::Index>(pairs.size());
  Matrix q(2 * k, n);
  for (Eigen::Index j = 0; j < k; ++j) {
    q.row(2 * j) = pairs[static_cast<std::size_t>(j)].x.transpose();
    q.row(2 * j + 1) = pairs[static_cast<std::size_t>(j)].y.transpose();
  }
  // Clean-up pass: the rows are orthonormal up to eigenvector accuracy.
  for (Eigen::Index i = 0; i < q.rows(); ++i) {
    for (int pass = 0; pass < 2; ++pass) {
      for (Eigen::Index p = 0; p < i; ++p) q.row(i) -= q.row(p).dot(q.row(i)) * q.row(p);
    }
    const double nr = q.row(i).norm();
    if (nr < 0.5) throw ConsistencyError("antisym_canonical: invariant planes are not independent");
    q.row(i) /= nr;
  }

  std::vector<double> mus(static_cast<std::size_t>(k));
  for (Eigen::Index j = 0; j < k; ++j) {
    mus[static_cast<std::size_t>(j)] = q.row(2 * j + 1).dot(skew * q.row(2 * j).transpose());
  }
  std::vector<std::size_t> order(mus.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return mus[a] > mus[c]; });

  form.mus.resize(mus.size());
  form.q_rows = Matrix(2 * k, n);
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto src = static_cast<Eigen::Index>(order[j]);
    const auto dst = static_cast<Eigen::Index>(j);
    form.mus[j] = mus[order[j]];
    form.q_rows.row(2 * dst) = q.row(2 * src);
    form.q_rows.row(2 * dst + 1) = q.row(2 * src + 1);
  }
  return form;
}

Matrix reconstruct(const AntisymCanonicalForm& form) {
  const auto n = static_cast<Eigen::Index>(form.n_ambient);
  if (form.k() == 0) return Matrix::Zero(n, n);
  return form.q_rows.transpose() * form.r_matrix() * form.q_rows;
}

Matrix block_rotation_generator(std::size_t k) {
  AntisymCanonicalForm unit;
  unit.mus.assign(k, 1.0);
  return unit.r_matrix();
}

Matrix interleave_permutation(std::size_t k) {
  if (k < 1) throw InputError("interleave_permutation: k must be at least 1");
  const auto kk = static_cast<Eigen::Index>(k);
  Matrix p = Matrix::Zero(2 * kk, 2 * kk);
  for (Eigen::Index j = 0; j < kk; ++j) {
    p(j, 2 * j) = 1.0;
    p(kk + j, 2 * j + 1) = 1.0;
  }
  return p;
}

}  // namespace grothsp
