#include "grothsp/grothendieck.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "grothsp/errors.hpp"
#include "grothsp/opnorms.hpp"
#include "grothsp/random.hpp"
#include "grothsp/symplectic.hpp"

namespace grothsp {

ScalingVector::ScalingVector(std::vector<double> values) : values_(std::move(values)) {
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) throw InputError("scaling vector entries must be strictly positive");
  }
  if (norm() > 1.0 + 1e-12) throw InputError("scaling vector must have Euclidean norm <= 1");
}

double ScalingVector::norm() const {
  return std::sqrt(std::inner_product(values_.begin(), values_.end(), values_.begin(), 0.0));
}

ScalingVector combine_scalings(std::span<const double> lambda0, std::span<const double> lambda1) {
  if (lambda0.size() != lambda1.size()) throw InputError("combine_scalings: length mismatch");
  if (lambda0.empty()) throw InputError("combine_scalings: empty input");
  auto check = [](std::span<const double> v) {
    double sq = 0.0;
    for (double x : v) {
      if (!(x >= 0.0) || !std::isfinite(x)) throw InputError("combine_scalings: entries must be non-negative");
      sq += x * x;
    }
    if (std::sqrt(sq) > 1.0 + 1e-12) throw InputError("combine_scalings: input norm exceeds 1");
  };
  check(lambda0);
  check(lambda1);

  const double n = static_cast<double>(lambda0.size());
  const double sqrt3 = std::sqrt(3.0);
  const double offset = (sqrt3 - std::sqrt(2.0)) / std::sqrt(n);
  std::vector<double> out(lambda0.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = (offset + std::max(lambda0[i], lambda1[i])) / sqrt3;
  }
  return ScalingVector(std::move(out));
}

namespace {

struct Evaluation {
  std::vector<double> lambda;
  double value = 0.0;
  Vector grad;
  std::size_t floored = 0;
};

Evaluation evaluate(const Matrix& a, const Vector& theta, double floor) {
  Evaluation e;
  const Vector w = (theta.array() - theta.maxCoeff()).exp();
  const Vector lam = w / w.norm();
  e.lambda.resize(static_cast<std::size_t>(lam.size()));
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    double l = lam(i);
    if (l < floor) {
      l = floor;
      ++e.floored;
    }
    e.lambda[static_cast<std::size_t>(i)] = l;
  }
  const SingularPair top = top_singular_pair(inverse_diagonal_scale(a, e.lambda));
  e.value = top.value;
  e.grad.resize(lam.size());
  for (Eigen::Index m = 0; m < lam.size(); ++m) {
    const double l = e.lambda[static_cast<std::size_t>(m)];
    e.grad(m) = top.value * (2.0 * l * l - top.left(m) * top.left(m) - top.right(m) * top.right(m));
  }
  return e;
}

Vector initial_theta(const Matrix& a, int restart, std::uint64_t seed) {
  const Eigen::Index n = a.rows();
  if (restart == 0) return Vector::Zero(n);
  if (restart == 1) {
    const Vector mass = a.cwiseAbs().rowwise().sum() + a.cwiseAbs().colwise().sum().transpose();
    const double tiny = 1e-12 * std::max(mass.maxCoeff(), 1e-300);
    return 0.5 * (mass.array() + tiny).log().matrix();
  }
  Engine engine = stream_engine(seed, static_cast<std::uint64_t>(restart));
  return gaussian_matrix(n, 1, engine);
}

}  // namespace

ScalingCertificate scaling_search(const Matrix& a, const ScalingSearchOptions& options) {
  if (a.rows() != a.cols() || a.rows() == 0) throw InputError("scaling_search: matrix must be square");
  if (abs_sum(a) == 0.0) throw InputError("scaling_search: zero matrix has no meaningful scaling");

  const double floor = 1e-8 / std::sqrt(static_cast<double>(a.rows()));
  Evaluation best;
  int best_restart = -1;
  for (int restart = 0; restart < std::max(options.restarts, 1); ++restart) {
    Vector theta = initial_theta(a, restart, options.seed);
    Evaluation current = evaluate(a, theta, floor);
    double step = options.step;
    for (int it = 0; it < options.iters && step > 1e-12; ++it) {
      const double gmax = current.grad.cwiseAbs().maxCoeff();
      if (gmax == 0.0) break;
      const Vector candidate_theta = theta - (step / gmax) * current.grad;
      Evaluation candidate = evaluate(a, candidate_theta, floor);
      if (candidate.value < current.value) {
        theta = candidate_theta;
        current = std::move(candidate);
      } else {
        step *= 0.5;
      }
    }
    if (best_restart < 0 || current.value < best.value) {
      best = std::move(current);
      best_restart = restart;
    }
  }

  ScalingCertificate cert;
  cert.lambda = ScalingVector(best.lambda);
  cert.scaled_norm = spectral_norm(inverse_diagonal_scale(a, best.lambda));
  cert.infty_one = options.infty_one ? *options.infty_one : infty_one_exact(a, options.enumeration_limit).value;
  cert.kg_used = options.kg;
  cert.certified = cert.scaled_norm <= 3.0 * options.kg * cert.infty_one + 1e-9;
  cert.floored = best.floored;
  cert.best_restart = best_restart;
  return cert;
}

InequalityReport theorem1_check(const Matrix& a, double kg, double tol, double rank_tol,
                                std::size_t enumeration_limit) {
  if (a.rows() != a.cols()) throw InputError("theorem1_check: matrix must be square");
  InequalityReport out;
  out.kg_used = kg;
  out.lhs = abs_sum(a);
  out.rank = numerical_rank(a, rank_tol);
  out.infty_one = infty_one_exact(a, enumeration_limit).value;
  out.rhs = 3.0 * kg * std::sqrt(static_cast<double>(out.rank)) * out.infty_one;
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  out.holds = out.lhs <= out.rhs * (1.0 + tol);
  return out;
}

InequalityReport corollary_check(const Matrix& vectors, double kg, double tol, std::size_t enumeration_limit) {
  if (vectors.rows() == 0 || vectors.rows() % 2 != 0) {
    throw InputError("corollary_check: ambient dimension must be even and positive");
  }
  const auto n = static_cast<std::size_t>(vectors.rows() / 2);
  const Matrix pairing = pairing_matrix(vectors, standard_J(n).j);
  InequalityReport out;
  out.kg_used = kg;
  out.lhs = abs_sum(pairing);
  out.rank = numerical_rank(pairing);
  out.infty_one = infty_one_exact(pairing, enumeration_limit).value;
  out.rhs = 3.0 * kg * std::sqrt(2.0 * static_cast<double>(n)) * out.infty_one;
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  out.holds = out.lhs <= out.rhs * (1.0 + tol);
  return out;
}

}  // namespace grothsp
