#include "grothsp/symplectic.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "grothsp/antisymmetric.hpp"
#include "grothsp/errors.hpp"
#include "grothsp/random.hpp"

namespace grothsp {

SymplecticSpace standard_J(std::size_t n) {
  if (n < 1) throw InputError("standard_J: n must be at least 1");
  const auto nn = static_cast<Eigen::Index>(n);
  SymplecticSpace space{n, Matrix::Zero(2 * nn, 2 * nn)};
  for (Eigen::Index i = 0; i < nn; ++i) {
    space.j(nn + i, i) = 1.0;
    space.j(i, nn + i) = -1.0;
  }
  return space;
}

SymplecticCheck is_symplectic(const Matrix& s, const SymplecticSpace& space, double tol) {
  if (s.rows() != space.j.rows() || s.cols() != space.j.cols()) {
    throw InputError("is_symplectic: matrix shape does not match the symplectic space");
  }
  SymplecticCheck out;
  out.residual = (s.transpose() * space.j * s - space.j).norm();
  out.holds = out.residual <= tol;
  return out;
}

VectorFamily make_family(Matrix columns) {
  if (columns.rows() == 0 || columns.rows() % 2 != 0) {
    throw InputError("vector family: ambient dimension must be even and positive");
  }
  if (columns.cols() == 0) throw InputError("vector family: at least one vector is required");
  VectorFamily family{standard_J(static_cast<std::size_t>(columns.rows() / 2)), std::move(columns)};
  return family;
}

Matrix pairing_matrix(const Matrix& columns, const Matrix& j) {
  if (columns.rows() != j.rows()) throw InputError("pairing_matrix: dimension mismatch");
  return columns.transpose() * j * columns;
}

Matrix pairing_matrix(const VectorFamily& family) { return pairing_matrix(family.columns, family.ambient.j); }

VectorFamily symplectic_transform(const VectorFamily& family, const Matrix& s, double tol) {
  const SymplecticCheck check = is_symplectic(s, family.ambient, tol);
  if (!check.holds) {
    throw InputError("symplectic_transform: matrix is not symplectic (residual " + std::to_string(check.residual) +
                     ")");
  }
  return VectorFamily{family.ambient, s * family.columns};
}

std::vector<Eigen::Index> IsotropicSplit::e0_coordinates() const {
  std::vector<Eigen::Index> idx;
  const auto nn = static_cast<Eigen::Index>(n);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k); ++i) idx.push_back(i);
  for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(k); ++i) idx.push_back(nn + i);
  return idx;
}

namespace {

// Symplectic pairs (a, b) with <a, J b> = -1 spanning the subspace with
// orthonormal basis `basis`, taken from the canonical form of its restricted
// form. Also returns an orthonormal basis of the kernel of that form.
struct RestrictedPairs {
  std::vector<Vector> a;
  std::vector<Vector> b;
  Matrix kernel;  // columns
};

RestrictedPairs restricted_pairs(const Matrix& basis, const Matrix& j, double tol) {
  RestrictedPairs out;
  const Eigen::Index d = basis.cols();
  out.kernel = Matrix(basis.rows(), 0);
  if (d == 0) return out;
  const Matrix g = basis.transpose() * j * basis;
  AntisymOptions options;
  options.rank_tol = tol;
  AntisymCanonicalForm form = antisym_canonical(0.5 * (g - g.transpose()), options);
  // The basis is orthonormal and J orthogonal, so |G| <= 1: values below tol
  // are round-off of a degenerate form, not pairs.
  std::size_t kept = 0;
  while (kept < form.k() && form.mus[kept] > tol) ++kept;
  form.mus.resize(kept);
  form.q_rows = Matrix(form.q_rows.topRows(static_cast<Eigen::Index>(2 * kept)));
  for (std::size_t p = 0; p < form.k(); ++p) {
    const double root = std::sqrt(form.mus[p]);
    const auto row = static_cast<Eigen::Index>(2 * p);
    out.a.push_back(basis * form.q_rows.row(row).transpose() / root);
    out.b.push_back(basis * form.q_rows.row(row + 1).transpose() / root);
  }
  const auto l = d - static_cast<Eigen::Index>(2 * form.k());
  if (l > 0) {
    const Matrix projector = Matrix::Identity(d, d) - form.q_rows.transpose() * form.q_rows;
    const SymEig eig = sym_eig(0.5 * (projector + projector.transpose()));
    out.kernel = basis * eig.vectors.leftCols(l);
  }
  return out;
}

double omega(const Matrix& j, const Vector& u, const Vector& v) { return u.dot(j * v); }

}  // namespace

IsotropicSplit symplectic_basis_extension(const VectorFamily& family, double tol) {
  const Matrix& j = family.ambient.j;
  const auto nn = static_cast<Eigen::Index>(family.ambient.half_dim);
  IsotropicSplit split;
  split.n = family.ambient.half_dim;

  // Left singular vectors rather than Gram-Schmidt over the vectors in order:
  // a vector nearly inside the span of its predecessors would otherwise leave
  // an inaccurate basis direction, and the eps family amplifies the error.
  Eigen::JacobiSVD<Matrix> svd_e(family.columns, Eigen::ComputeThinU);
  const Matrix e_basis = svd_e.matrixU().leftCols(static_cast<Eigen::Index>(numerical_rank(family.columns, tol)));
  RestrictedPairs inside = restricted_pairs(e_basis, j, tol);
  const auto k = static_cast<Eigen::Index>(inside.a.size());
  const Eigen::Index l = inside.kernel.cols();
  if (k + l > nn) throw ConsistencyError("symplectic_basis_extension: k + l exceeds n");

  // Partners for the isotropic directions c_i: a'_i = p(-J c_i) with p the
  // symplectic projection off the pairs inside E, then a_i = a'_i - 1/2 sum_j
  // omega(a'_i, a'_j) c_j makes the partners mutually isotropic.
  std::vector<Vector> partners;
  for (Eigen::Index i = 0; i < l; ++i) {
    Vector v = -(j * inside.kernel.col(i));
    Vector p = v;
    for (Eigen::Index q = 0; q < k; ++q) {
      const auto qi = static_cast<std::size_t>(q);
      p += omega(j, v, inside.b[qi]) * inside.a[qi] - omega(j, v, inside.a[qi]) * inside.b[qi];
    }
    partners.push_back(p);
  }
  std::vector<Vector> corrected = partners;
  for (Eigen::Index i = 0; i < l; ++i) {
    for (Eigen::Index q = 0; q < l; ++q) {
      const double w = omega(j, partners[static_cast<std::size_t>(i)], partners[static_cast<std::size_t>(q)]);
      corrected[static_cast<std::size_t>(i)] -= 0.5 * w * inside.kernel.col(q);
    }
  }

  const Eigen::Index used = 2 * (k + l);
  Matrix chosen(2 * nn, used);
  for (Eigen::Index q = 0; q < k; ++q) {
    chosen.col(q) = inside.a[static_cast<std::size_t>(q)];
    chosen.col(k + l + q) = inside.b[static_cast<std::size_t>(q)];
  }
  for (Eigen::Index i = 0; i < l; ++i) {
    chosen.col(k + i) = corrected[static_cast<std::size_t>(i)];
    chosen.col(2 * k + l + i) = inside.kernel.col(i);
  }

  // Symplectic complement = orthogonal complement of J * chosen.
  Matrix complement(2 * nn, 0);
  if (used == 0) {
    complement = Matrix::Identity(2 * nn, 2 * nn);
  } else if (used < 2 * nn) {
    Eigen::JacobiSVD<Matrix> svd(j * chosen, Eigen::ComputeFullU);
    complement = svd.matrixU().rightCols(2 * nn - used);
  }
  RestrictedPairs outside = restricted_pairs(complement, j, tol);
  if (static_cast<Eigen::Index>(outside.a.size()) * 2 != 2 * nn - used) {
    throw ConsistencyError("symplectic_basis_extension: symplectic complement is degenerate");
  }

  // Basis matrix M with columns a_1..a_n, b_1..b_n; M^T J M = J.
  Matrix basis(2 * nn, 2 * nn);
  for (Eigen::Index q = 0; q < k + l; ++q) {
    basis.col(q) = chosen.col(q);
    basis.col(nn + q) = chosen.col(k + l + q);
  }
  for (Eigen::Index q = 0; q < nn - k - l; ++q) {
    basis.col(k + l + q) = outside.a[static_cast<std::size_t>(q)];
    basis.col(nn + k + l + q) = outside.b[static_cast<std::size_t>(q)];
  }
  split.t = -j * basis.transpose() * j;
  split.k = static_cast<std::size_t>(k);
  split.l = static_cast<std::size_t>(l);

  for (auto& p : split.projections) p = Matrix::Zero(2 * nn, 2 * nn);
  for (Eigen::Index i = 0; i < nn; ++i) {
    if (i < k) {
      split.projections[0](i, i) = 1.0;
      split.projections[0](nn + i, nn + i) = 1.0;
    } else if (i < k + l) {
      split.projections[2](i, i) = 1.0;
      split.projections[1](nn + i, nn + i) = 1.0;
    } else {
      split.projections[3](i, i) = 1.0;
      split.projections[3](nn + i, nn + i) = 1.0;
    }
  }
  return split;
}

Matrix random_symplectic(std::size_t n, double scale, std::uint64_t seed) {
  const SymplecticSpace space = standard_J(n);
  const auto dim = static_cast<Eigen::Index>(2 * n);
  Engine engine = stream_engine(seed, 0);
  const Matrix h = gaussian_matrix(dim, dim, engine, scale);
  return matrix_exp(space.j * (0.5 * (h + h.transpose())));
}

Matrix fourier_orthogonal(std::size_t m) {
  if (m < 1) throw InputError("fourier_orthogonal: m must be at least 1");
  const auto mm = static_cast<Eigen::Index>(m);
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  Matrix u(2 * mm, 2 * mm);
  for (Eigen::Index jb = 1; jb <= mm; ++jb) {
    for (Eigen::Index lb = 1; lb <= mm; ++lb) {
      // j * l reduced mod m keeps the angle argument small.
      const double angle = 2.0 * std::numbers::pi * static_cast<double>((jb * lb) % mm) / static_cast<double>(m);
      const double c = norm * std::cos(angle);
      const double s = norm * std::sin(angle);
      const Eigen::Index r = 2 * (jb - 1);
      const Eigen::Index q = 2 * (lb - 1);
      u(r, q) = c;
      u(r, q + 1) = -s;
      u(r + 1, q) = s;
      u(r + 1, q + 1) = c;
    }
  }
  return u;
}

VectorFamily example2_vectors(std::size_t n, std::size_t m, std::size_t count) {
  if (m < 1 || m > n) throw InputError("example2_vectors: requires 1 <= m <= n");
  if (count < 2 * m) throw InputError("example2_vectors: requires N >= 2m");
  const auto nn = static_cast<Eigen::Index>(n);
  const auto mm = static_cast<Eigen::Index>(m);
  Matrix v = Matrix::Zero(2 * nn, static_cast<Eigen::Index>(count));
  for (Eigen::Index i = 0; i < mm; ++i) {
    v(i, i) = 1.0;
    v(nn + i, mm + i) = 1.0;
  }
  return make_family(std::move(v));
}

}  // namespace grothsp
