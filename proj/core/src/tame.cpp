#include "grothsp/tame.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "grothsp/antisymmetric.hpp"
#include "grothsp/errors.hpp"
#include "grothsp/opnorms.hpp"

namespace grothsp {

Matrix TameResult::s_at(double e) const {
  if (!(e > 0.0)) throw InputError("tame: eps must be positive");
  const auto nn = static_cast<Eigen::Index>(n);
  const auto kk = static_cast<Eigen::Index>(k);
  const auto ll = static_cast<Eigen::Index>(l);
  Matrix normal = Matrix::Identity(2 * nn, 2 * nn);
  if (kk > 0) {
    // Embed S0 on the coordinates {0..k-1, n..n+k-1}.
    for (Eigen::Index a = 0; a < 2 * kk; ++a) {
      const Eigen::Index ra = a < kk ? a : nn + (a - kk);
      for (Eigen::Index b = 0; b < 2 * kk; ++b) {
        const Eigen::Index rb = b < kk ? b : nn + (b - kk);
        normal(ra, rb) = s0(a, b);
      }
    }
  }
  for (Eigen::Index i = kk; i < kk + ll; ++i) {
    normal(nn + i, nn + i) = e;
    normal(i, i) = 1.0 / e;
  }
  return normal * t;
}

TameResult tame(const VectorFamily& family, const TameOptions& options) {
  if (!(options.eps > 0.0)) throw InputError("tame: eps must be positive");
  const Matrix& v = family.columns;
  const Matrix a = pairing_matrix(family);

  TameResult out;
  out.n = family.ambient.half_dim;
  out.eps = options.eps;
  // |<v_i, J v_j>| <= ||V||^2, so singular values of A are measured against
  // that scale; an isotropic family then has rank zero despite round-off.
  const double v_scale = std::pow(spectral_norm(v), 2);
  const Vector sv = singular_values(a);
  out.rank = static_cast<std::size_t>((sv.array() > options.rank_tol * v_scale).count());
  if (out.rank > 0) {
    out.infty_one = infty_one_exact(a, options.enumeration_limit).value;
    out.scale = 1.0 / std::sqrt(out.infty_one);
  }

  const VectorFamily rescaled{family.ambient, out.scale * v};
  const IsotropicSplit split = symplectic_basis_extension(rescaled, options.rank_tol);
  if (2 * split.k != out.rank) {
    throw ConsistencyError("tame: restricted form has rank " + std::to_string(2 * split.k) +
                           " but the pairing matrix has rank " + std::to_string(out.rank));
  }
  out.k = split.k;
  out.l = split.l;
  out.t = split.t;
  out.case_tag = 2 * out.k == 2 * out.n ? TameCase::full_rank : TameCase::degenerate;

  const Matrix normalized = split.t * rescaled.columns;
  const auto kk = static_cast<Eigen::Index>(out.k);
  const auto count = v.cols();
  out.s0 = Matrix(0, 0);
  out.w_matrix = Matrix(0, count);

  Matrix reduced_image = Matrix::Zero(2 * kk, count);
  if (kk > 0) {
    const auto coords = split.e0_coordinates();
    Matrix v0(2 * kk, count);
    for (Eigen::Index r = 0; r < 2 * kk; ++r) v0.row(r) = normalized.row(coords[static_cast<std::size_t>(r)]);

    const Matrix a_scaled = out.scale * out.scale * a;
    ScalingSearchOptions search = options.search;
    search.kg = options.kg;
    search.infty_one = 1.0;
    out.scaling = scaling_search(a_scaled, search);
    out.certified = out.scaling.certified;

    const auto& lambda = out.scaling.lambda.values();
    const Matrix b = inverse_diagonal_scale(a_scaled, lambda);
    AntisymOptions antisym;
    antisym.rank_tol = options.rank_tol;
    const AntisymCanonicalForm form = antisym_canonical(0.5 * (b - b.transpose()), antisym);
    if (form.k() != out.k) {
      throw ConsistencyError("tame: scaled pairing has " + std::to_string(form.k()) + " blocks, expected " +
                             std::to_string(out.k));
    }
    const Vector d_lambda = Eigen::Map<const Vector>(lambda.data(), static_cast<Eigen::Index>(lambda.size()));
    out.w_matrix = interleave_permutation(out.k) * form.m_vector().asDiagonal() * form.q_rows *
                   d_lambda.asDiagonal();
    out.s0 = solve_right_factor(v0, out.w_matrix, options.kernel_tol);
    reduced_image = out.s0 * v0;
  }

  out.s_matrix = out.s_at(options.eps);
  out.symplectic_residual = is_symplectic(out.s_matrix, family.ambient).residual;

  const Matrix image = out.s_matrix * v;
  const Matrix tv = split.t * v;
  for (Eigen::Index i = 0; i < count; ++i) {
    out.achieved_sum += image.col(i).norm();
    out.limit_sum += reduced_image.col(i).norm() / out.scale;
    out.normalized_mass += tv.col(i).norm();
    out.isotropic_mass += (split.projections[1] * tv.col(i)).norm();
  }

  double v_mass = 0.0;
  for (Eigen::Index i = 0; i < count; ++i) v_mass += v.col(i).norm();
  out.roundoff_allowance = out.l == 0 ? 0.0
                                      : 2.0 * static_cast<double>(out.n) * std::numeric_limits<double>::epsilon() *
                                            spectral_norm(split.t) * v_mass / options.eps;

  const double r = static_cast<double>(out.rank);
  out.certified_bound = std::sqrt(3.0 * options.kg * r * out.infty_one);
  out.empirical_bound = kk > 0 ? std::sqrt(out.scaling.scaled_norm * r * out.infty_one) : 0.0;
  return out;
}

}  // namespace grothsp
