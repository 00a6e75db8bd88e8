#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eulercount/grid.hpp"
#include "eulercount/targets.hpp"

namespace eulercount {

// Adjacency used for excursion sets. Both are 8-neighbour: this is the pairing
// that reproduces the measured tangency counts (b = 8 for r = 1, 88 for r = 6).
inline constexpr Connectivity kUpperConnectivity = Connectivity::EightNeighbor;
inline constexpr Connectivity kLowerConnectivity = Connectivity::EightNeighbor;

enum class Padding {
  Zero,  ///< embed the field in an infinite zero plane
  None,  ///< evaluate on the bare rectangle (diagnostic)
};

struct LevelContribution {
  std::uint32_t level = 0;
  std::int64_t upper_components = 0;  ///< beta0{h > level}
  std::int64_t lower_components = 0;  ///< beta0{h <= level}

  std::int64_t term() const { return upper_components - lower_components + 1; }
};

/// One entry per level s = 0 .. max(h) - 1.
std::vector<LevelContribution> level_contributions(const HeightField& field,
                                                   Padding padding = Padding::Zero);

/// Euler characteristic integral via the duality formula
///   sum_s beta0{h > s} - beta0{h <= s} + 1.
std::int64_t euler_integral(const HeightField& field, Padding padding = Padding::Zero);

/// Euler integral of the zero-padded field made by stamping `disk` at every
/// centre, computed on row runs instead of a dense grid. Centres may be any
/// integers (negative included). Equal to euler_integral() of the dense field.
std::int64_t disk_stack_integral(const DiskTemplate& disk, std::span<const Point> centers);

}  // namespace eulercount
