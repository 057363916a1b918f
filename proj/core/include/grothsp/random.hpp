#pragma once

#include <cstdint>
#include <random>

#include "grothsp/linalg.hpp"

namespace grothsp {

using Engine = std::mt19937_64;

/// Mixes (seed, stream) into an independent 64-bit seed (splitmix64
/// finalizer), so per-trial streams do not depend on execution order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Engine for stream `stream` of the master seed `seed`.
Engine stream_engine(std::uint64_t seed, std::uint64_t stream);

/// Matrix with i.i.d. N(0, scale^2) entries.
Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Engine& engine, double scale = 1.0);

/// Matrix with i.i.d. uniform +-1 entries.
Matrix sign_matrix(Eigen::Index rows, Eigen::Index cols, Engine& engine);

}  // namespace grothsp
