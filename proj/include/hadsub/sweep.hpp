#pragma once

#include <cstdint>
#include <vector>

#include "hadsub/hadamard.hpp"

namespace hadsub {

inline constexpr std::size_t kMaxSweepPoints = 2'000'000;

struct SweepPoint {
  std::vector<double> params;  // radians
  std::size_t pattern = 0;     // index into SweepResult::patterns
  std::size_t dim = 0;         // second relative commutant
};

struct SweepResult {
  Family family;
  std::vector<std::size_t> grid;
  std::vector<SweepPoint> points;            // in grid (row-major) order
  std::vector<std::vector<bool>> patterns;   // distinct n^4 zero patterns, first-seen order
  std::vector<std::size_t> pattern_counts;
  std::size_t generic_pattern = 0;           // most frequent pattern
  std::size_t generic_dim = 0;
  std::vector<std::size_t> exceptional;      // indices into points
};

/// Angles sampled for one parameter: 2 pi j / g, except bn6 whose g samples
/// are spread evenly (cell midpoints) over its valid angle set.
std::vector<double> sweep_axis(Family family, std::size_t g);

/// For each grid point records which profile entries vanish (|p| <= tol) and
/// the second relative commutant dimension. Throws InputError for families
/// without angle parameters or grids that are too large.
SweepResult zero_pattern_sweep(Family family, const std::vector<std::size_t>& grid, double tol = kDefaultTol,
                               std::size_t max_points = kMaxSweepPoints, unsigned threads = 0);

}  // namespace hadsub
