#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mvstop/qmetric.hpp"

namespace mvstop {

/// Seeded source of random quasimetric spaces.
///
/// Generator: std::mt19937_64 seeded with the 64-bit seed. Each space draws
/// its size as 1 + r % max_points. The off-diagonal entries are then filled
/// row by row. Each entry is drawn as r % k (value index, k = |M|) and
/// redrawn while it breaks (f1) on a triangle whose other two sides are
/// already placed, up to 4k draws. If an entry exhausts its draws, the table
/// is restarted at the same size. The diagonal is e and points are labelled
/// "0", "1", ...
class SpaceGenerator {
 public:
  SpaceGenerator(std::uint64_t seed, MvsRef m, std::size_t max_points);

  QmSpace next();
  /// Same procedure with a fixed number of points.
  QmSpace next(std::size_t points);

 private:
  std::mt19937_64 rng_;
  MvsRef mvs_;
  std::size_t max_points_;
};

}  // namespace mvstop
