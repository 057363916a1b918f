#pragma once

#include <cstddef>
#include <numbers>

namespace grothsp {

/// sinh(pi/2): Grothendieck's own upper bound on K_G. The exact constant is
/// unknown, so every certified check defaults to this value.
inline constexpr double kKgUpper = 2.3012989023072947;

/// pi/2: the matching lower bound on K_G.
inline constexpr double kKgLower = std::numbers::pi / 2.0;

/// Relative threshold below which singular values count as zero.
inline constexpr double kDefaultRankTol = 1e-8;

/// Largest side length for which the l_inf -> l_1 norm is enumerated exactly.
inline constexpr std::size_t kDefaultEnumerationLimit = 25;

}  // namespace grothsp
