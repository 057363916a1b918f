#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "grothsp/constants.hpp"

namespace grothsp {

struct SweepRow {
  double parameter = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool holds = false;
  double runtime_ms = 0.0;
  std::string note;

  bool operator==(const SweepRow&) const = default;
};

struct SweepReport {
  std::string kind;
  double kg_used = kKgUpper;
  std::vector<SweepRow> rows;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  bool all_hold = true;
  /// Largest observed ratio overall and per parameter value (BLT sweeps: the
  /// empirical constant c(n)).
  double empirical_cn = 0.0;
  std::vector<std::pair<double, double>> empirical_cn_by_parameter;

  bool operator==(const SweepReport&) const = default;
};

/// Recomputes the aggregate fields from `rows`.
void finalize(SweepReport& report);

/// For each m, embeds the 2m x 2m Fourier block as the top-left corner of a
/// max(n_pad, 2m) square zero matrix. Row: lhs = sum |a_ij|,
/// rhs = sqrt(rank) ||A||_{inf->1}, ratio = lhs / rhs, holds when
/// 1/sqrt2 - 1e-9 <= ratio <= 3 kg + 1e-9. Blocks beyond the enumeration
/// limit use the rigorous upper bound on the norm (the ratio is then a lower
/// bound on the true one) and say so in the row note.
SweepReport sharpness_sweep(const std::vector<std::size_t>& ms, std::size_t n_pad, double kg = kKgUpper,
                            std::size_t enumeration_limit = kDefaultEnumerationLimit);

/// Gaussian families of `count` vectors in R^{2n}, `trials` per n. Row:
/// lhs = sum |<v_i, J v_j>|, rhs = 3 kg sqrt(2n) ||A||_{inf->1},
/// ratio = lhs / ||A||_{inf->1} (an empirical lower estimate of c(n)).
/// Families with a zero pairing matrix are recorded with a note and ratio 0.
SweepReport blt_sweep(const std::vector<std::size_t>& ns, std::size_t count, std::size_t trials,
                      std::uint64_t seed, double kg = kKgUpper);

/// For each n: `trials` Gaussian families, one Example-2 family (m = n) and
/// one isotropic family, each tamed at `eps`. Row: lhs = achieved^2,
/// rhs = 3 kg rank ||A||_{inf->1}, ratio = lhs / rhs. Example-2 rows also
/// require achieved >= 2m - 1e-8; rank-zero rows check the eps-limit form
/// achieved <= eps * sum ||T v_i|| up to the round-off amplified by 1 / eps.
SweepReport tame_bench(const std::vector<std::size_t>& ns, std::size_t count, std::size_t trials,
                       std::uint64_t seed, double eps = 1e-6, double kg = kKgUpper);

}  // namespace grothsp
