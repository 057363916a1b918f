#include "grothsp/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "grothsp/errors.hpp"
#include "grothsp/grothendieck.hpp"
#include "grothsp/opnorms.hpp"
#include "grothsp/random.hpp"
#include "grothsp/symplectic.hpp"
#include "grothsp/tame.hpp"

namespace grothsp {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t trial_stream(std::size_t parameter, std::size_t trial) {
  return (static_cast<std::uint64_t>(parameter) << 32) | static_cast<std::uint64_t>(trial);
}

}  // namespace

void finalize(SweepReport& report) {
  report.all_hold = true;
  report.max_ratio = 0.0;
  report.min_ratio = 0.0;
  report.empirical_cn = 0.0;
  std::map<double, double> by_parameter;
  bool first = true;
  for (const SweepRow& row : report.rows) {
    report.all_hold = report.all_hold && row.holds;
    if (first) {
      report.max_ratio = report.min_ratio = row.ratio;
      first = false;
    } else {
      report.max_ratio = std::max(report.max_ratio, row.ratio);
      report.min_ratio = std::min(report.min_ratio, row.ratio);
    }
    auto [it, inserted] = by_parameter.try_emplace(row.parameter, row.ratio);
    if (!inserted) it->second = std::max(it->second, row.ratio);
  }
  report.empirical_cn = report.max_ratio;
  report.empirical_cn_by_parameter.assign(by_parameter.begin(), by_parameter.end());
}

SweepReport sharpness_sweep(const std::vector<std::size_t>& ms, std::size_t n_pad, double kg,
                            std::size_t enumeration_limit) {
  SweepReport report;
  report.kind = "sharpness";
  report.kg_used = kg;
  const double floor = 1.0 / std::sqrt(2.0) - 1e-9;
  for (std::size_t m : ms) {
    const auto start = Clock::now();
    const Matrix u = fourier_orthogonal(m);
    const auto size = static_cast<Eigen::Index>(std::max(n_pad, 2 * m));
    Matrix a = Matrix::Zero(size, size);
    a.topLeftCorner(u.rows(), u.cols()) = u;

    SweepRow row;
    row.parameter = static_cast<double>(m);
    row.lhs = abs_sum(a);
    const double rank = static_cast<double>(numerical_rank(a));
    double norm = 0.0;
    if (2 * m <= enumeration_limit) {
      norm = infty_one_exact(a, enumeration_limit).value;
    } else {
      norm = infty_one_upper_rigorous(a);
      row.note = "inf->1 norm replaced by the upper bound sqrt(rc)*s0; ratio is a lower bound";
    }
    row.rhs = std::sqrt(rank) * norm;
    row.ratio = row.rhs > 0.0 ? row.lhs / row.rhs : 0.0;
    row.holds = row.ratio >= floor && row.ratio <= 3.0 * kg + 1e-9;
    row.runtime_ms = elapsed_ms(start);
    report.rows.push_back(row);
  }
  finalize(report);
  return report;
}

SweepReport blt_sweep(const std::vector<std::size_t>& ns, std::size_t count, std::size_t trials,
                      std::uint64_t seed, double kg) {
  SweepReport report;
  report.kind = "blt";
  report.kg_used = kg;
  for (std::size_t n : ns) {
    const SymplecticSpace space = standard_J(n);
    const double bound = 3.0 * kg * std::sqrt(2.0 * static_cast<double>(n));
    for (std::size_t trial = 0; trial < trials; ++trial) {
      const auto start = Clock::now();
      Engine engine = stream_engine(seed, trial_stream(n, trial));
      const Matrix v = gaussian_matrix(static_cast<Eigen::Index>(2 * n), static_cast<Eigen::Index>(count), engine);
      const Matrix a = pairing_matrix(v, space.j);
      SweepRow row;
      row.parameter = static_cast<double>(n);
      row.lhs = abs_sum(a);
      const double norm = infty_one_exact(a).value;
      row.rhs = bound * norm;
      if (norm > 0.0) {
        row.ratio = row.lhs / norm;
      } else {
        row.note = "zero pairing matrix";
      }
      row.holds = row.lhs <= row.rhs * (1.0 + 1e-9);
      row.runtime_ms = elapsed_ms(start);
      report.rows.push_back(row);
    }
  }
  finalize(report);
  return report;
}

namespace {

SweepRow tame_row(const VectorFamily& family, std::size_t n, double eps, double kg, const std::string& label,
                  double lower_bound) {
  const auto start = Clock::now();
  TameOptions options;
  options.eps = eps;
  options.kg = kg;
  SweepRow row;
  row.parameter = static_cast<double>(n);
  row.note = label;
  const TameResult result = tame(family, options);
  row.lhs = result.achieved_sum * result.achieved_sum;
  row.rhs = 3.0 * kg * static_cast<double>(result.rank) * result.infty_one;
  const bool symplectic = result.symplectic_residual <= 1e-8;
  if (result.rank > 0) {
    row.ratio = row.lhs / row.rhs;
    row.holds = symplectic && row.lhs <= row.rhs * (1.0 + 1e-6);
  } else {
    row.holds = symplectic && result.achieved_sum <= eps * result.normalized_mass * (1.0 + 1e-6) + result.roundoff_allowance;
    row.note += "; rank 0, eps-limit form";
  }
  if (lower_bound > 0.0) row.holds = row.holds && result.achieved_sum >= lower_bound - 1e-8;
  if (!result.certified) row.note += "; scaling not certified";
  row.runtime_ms = elapsed_ms(start);
  return row;
}

}  // namespace

SweepReport tame_bench(const std::vector<std::size_t>& ns, std::size_t count, std::size_t trials,
                       std::uint64_t seed, double eps, double kg) {
  SweepReport report;
  report.kind = "tame";
  report.kg_used = kg;
  for (std::size_t n : ns) {
    const auto dim = static_cast<Eigen::Index>(2 * n);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Engine engine = stream_engine(seed, trial_stream(n, trial));
      VectorFamily family = make_family(gaussian_matrix(dim, static_cast<Eigen::Index>(count), engine));
      report.rows.push_back(tame_row(family, n, eps, kg, "random", 0.0));
    }
    const VectorFamily example = example2_vectors(n, n, std::max(count, 2 * n));
    report.rows.push_back(tame_row(example, n, eps, kg, "example2", 2.0 * static_cast<double>(n)));

    // Random vectors in the Lagrangian span{e_1..e_n}, moved by a random symplectic map.
    Engine engine = stream_engine(seed, trial_stream(n, trials));
    Matrix lagrangian = Matrix::Zero(dim, static_cast<Eigen::Index>(count));
    lagrangian.topRows(static_cast<Eigen::Index>(n)) =
        gaussian_matrix(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(count), engine);
    const Matrix s = random_symplectic(n, 0.3, derive_seed(seed, trial_stream(n, trials + 1)));
    report.rows.push_back(tame_row(make_family(s * lagrangian), n, eps, kg, "isotropic", 0.0));
  }
  finalize(report);
  return report;
}

}  // namespace grothsp
