#include "grothsp/opnorms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "grothsp/errors.hpp"
#include "grothsp/random.hpp"

namespace grothsp {

namespace {

std::vector<Eigen::Index> nonzero_rows(const Matrix& a) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    if (a.row(i).cwiseAbs().maxCoeff() > 0.0) out.push_back(i);
  return out;
}

std::vector<Eigen::Index> nonzero_cols(const Matrix& a) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    if (a.col(j).cwiseAbs().maxCoeff() > 0.0) out.push_back(j);
  return out;
}

int sign_of(double x) { return x < 0.0 ? -1 : 1; }

// -1 < +1, compared coordinate by coordinate.
bool lex_less(const std::vector<int>& a, const std::vector<int>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Maximizes ||M s||_1 over s in {+-1}^cols with s_0 = +1 via a Gray-code walk.
std::vector<int> enumerate_best_signs(const Matrix& m) {
  const Eigen::Index p = m.cols();
  std::vector<int> s(static_cast<std::size_t>(p), 1);
  if (p == 0) return s;
  const double tie_tol = 64.0 * std::numeric_limits<double>::epsilon() * m.cwiseAbs().sum();

  Vector y = m.rowwise().sum();
  std::vector<int> best = s;
  double best_value = y.cwiseAbs().sum();

  const std::uint64_t count = std::uint64_t{1} << (p - 1);
  for (std::uint64_t i = 1; i < count; ++i) {
    const auto flip = static_cast<Eigen::Index>(std::countr_zero(i)) + 1;
    auto& sign = s[static_cast<std::size_t>(flip)];
    sign = -sign;
    if ((i & 0xfffU) == 0) {
      // Periodic recompute bounds the drift of the incremental update.
      y.setZero();
      for (Eigen::Index j = 0; j < p; ++j) y += s[static_cast<std::size_t>(j)] * m.col(j);
    } else {
      y += (2.0 * sign) * m.col(flip);
    }
    const double value = y.cwiseAbs().sum();
    if (value > best_value + tie_tol) {
      best_value = value;
      best = s;
    } else if (value >= best_value - tie_tol && lex_less(s, best)) {
      best_value = std::max(best_value, value);
      best = s;
    }
  }
  return best;
}

}  // namespace

double abs_sum(const Matrix& a) { return a.cwiseAbs().sum(); }

double bilinear(const Matrix& a, const std::vector<int>& t, const std::vector<int>& s) {
  if (t.size() != static_cast<std::size_t>(a.rows()) || s.size() != static_cast<std::size_t>(a.cols())) {
    throw InputError("bilinear: witness length does not match matrix shape");
  }
  double total = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) row += a(i, j) * s[static_cast<std::size_t>(j)];
    total += t[static_cast<std::size_t>(i)] * row;
  }
  return total;
}

InftyOneResult infty_one_exact(const Matrix& a, std::size_t limit) {
  InftyOneResult out;
  out.exact = true;
  out.witness_t.assign(static_cast<std::size_t>(a.rows()), 1);
  out.witness_s.assign(static_cast<std::size_t>(a.cols()), 1);

  const auto rows = nonzero_rows(a);
  const auto cols = nonzero_cols(a);
  if (rows.empty()) return out;
  if (std::min(rows.size(), cols.size()) > limit) {
    throw CapacityError("infty_one_exact: " + std::to_string(std::min(rows.size(), cols.size())) +
                        " sign variables exceed the enumeration limit " + std::to_string(limit) +
                        "; use infty_one_bounds");
  }
  const auto sub_rows = static_cast<Eigen::Index>(rows.size());
  const auto sub_cols = static_cast<Eigen::Index>(cols.size());
  Matrix sub(sub_rows, sub_cols);
  for (Eigen::Index i = 0; i < sub_rows; ++i)
    for (Eigen::Index j = 0; j < sub_cols; ++j) sub(i, j) = a(rows[i], cols[j]);

  const bool over_cols = sub_cols <= sub_rows;
  const Matrix m = over_cols ? sub : Matrix(sub.transpose());
  const std::vector<int> enumerated = enumerate_best_signs(m);
  Vector y = Vector::Zero(m.rows());
  for (Eigen::Index j = 0; j < m.cols(); ++j) y += enumerated[static_cast<std::size_t>(j)] * m.col(j);

  const auto& s_side = over_cols ? cols : rows;
  const auto& t_side = over_cols ? rows : cols;
  auto& s_witness = over_cols ? out.witness_s : out.witness_t;
  auto& t_witness = over_cols ? out.witness_t : out.witness_s;
  for (std::size_t j = 0; j < s_side.size(); ++j) s_witness[static_cast<std::size_t>(s_side[j])] = enumerated[j];
  for (std::size_t i = 0; i < t_side.size(); ++i)
    t_witness[static_cast<std::size_t>(t_side[i])] = sign_of(y(static_cast<Eigen::Index>(i)));

  out.value = bilinear(a, out.witness_t, out.witness_s);
  return out;
}

double infty_one_upper_rigorous(const Matrix& a) {
  const auto r = nonzero_rows(a).size();
  const auto c = nonzero_cols(a).size();
  if (r == 0) return 0.0;
  return std::sqrt(static_cast<double>(r) * static_cast<double>(c)) * spectral_norm(a);
}

InftyOneBounds infty_one_bounds(const Matrix& a, int rank_param, int iters, std::uint64_t seed,
                                double kg_upper) {
  InftyOneBounds out;
  const double total = abs_sum(a);
  if (total == 0.0) return out;

  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  const Eigen::Index r =
      rank_param > 0 ? rank_param
                     : static_cast<Eigen::Index>(std::ceil(std::sqrt(2.0 * static_cast<double>(std::max(m, n)))));
  constexpr int kRestarts = 20;
  constexpr int kRoundings = 16;

  auto normalize_rows = [](Matrix& x) {
    for (Eigen::Index i = 0; i < x.rows(); ++i) {
      const double nr = x.row(i).norm();
      if (nr > 0.0) x.row(i) /= nr;
    }
  };

  double relaxation = 0.0;
  double lower = 0.0;
  for (int restart = 0; restart < kRestarts; ++restart) {
    Engine engine = stream_engine(seed, static_cast<std::uint64_t>(restart));
    Matrix x = gaussian_matrix(m, r, engine);
    Matrix y = gaussian_matrix(n, r, engine);
    normalize_rows(x);
    normalize_rows(y);
    double value = (x.transpose() * a * y).trace();
    for (int it = 0; it < iters; ++it) {
      Matrix nx = a * y;
      normalize_rows(nx);
      // Zero rows of A leave their vector unchanged.
      for (Eigen::Index i = 0; i < m; ++i)
        if (nx.row(i).squaredNorm() == 0.0) nx.row(i) = x.row(i);
      x = nx;
      Matrix ny = a.transpose() * x;
      normalize_rows(ny);
      for (Eigen::Index j = 0; j < n; ++j)
        if (ny.row(j).squaredNorm() == 0.0) ny.row(j) = y.row(j);
      y = ny;
      const double next = (x.transpose() * a * y).trace();
      const bool stalled = next - value <= 1e-13 * std::abs(next);
      value = next;
      if (stalled) break;
    }
    relaxation = std::max(relaxation, value);

    for (int k = 0; k < kRoundings; ++k) {
      const Vector g = gaussian_matrix(r, 1, engine);
      std::vector<int> t(static_cast<std::size_t>(m));
      std::vector<int> s(static_cast<std::size_t>(n));
      for (Eigen::Index i = 0; i < m; ++i) t[static_cast<std::size_t>(i)] = sign_of(x.row(i).dot(g));
      for (Eigen::Index j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = sign_of(y.row(j).dot(g));
      double current = bilinear(a, t, s);
      for (int polish = 0; polish < 100; ++polish) {
        Vector ts = Vector::Zero(n);
        for (Eigen::Index i = 0; i < m; ++i) ts += t[static_cast<std::size_t>(i)] * a.row(i).transpose();
        for (Eigen::Index j = 0; j < n; ++j) s[static_cast<std::size_t>(j)] = sign_of(ts(j));
        Vector as = Vector::Zero(m);
        for (Eigen::Index j = 0; j < n; ++j) as += s[static_cast<std::size_t>(j)] * a.col(j);
        for (Eigen::Index i = 0; i < m; ++i) t[static_cast<std::size_t>(i)] = sign_of(as(i));
        const double next = bilinear(a, t, s);
        if (next <= current) break;
        current = next;
      }
      lower = std::max(lower, current);
    }
  }

  out.lower = lower;
  out.upper = std::min({kg_upper * std::max(relaxation, lower), total, infty_one_upper_rigorous(a)});
  out.upper = std::max(out.upper, out.lower);
  return out;
}

}  // namespace grothsp
