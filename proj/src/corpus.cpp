#include "mvstop/corpus.hpp"

namespace mvstop {

namespace {

constexpr std::size_t kTriesPerValue = 4;

}  // namespace

SpaceGenerator::SpaceGenerator(std::uint64_t seed, MvsRef m, std::size_t max_points)
    : rng_(seed), mvs_(std::move(m)), max_points_(max_points) {
  if (max_points_ == 0) throw InputError("random spaces need at least one point");
}

QmSpace SpaceGenerator::next() { return next(1 + rng_() % max_points_); }

QmSpace SpaceGenerator::next(std::size_t n) {
  const auto& m = *mvs_;
  const auto k = m.size();
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n, m.neutral()));
  std::vector<std::vector<bool>> placed(n, std::vector<bool>(n, false));

  // (f1) on every triangle through (x,y) whose other two sides are placed
  auto consistent = [&](std::size_t x, std::size_t y, Element v) {
    for (std::size_t z = 0; z < n; ++z) {
      if (placed[x][z] && placed[z][y] && !m.leq(v, m.add(d[x][z], d[z][y]))) return false;
      if (placed[x][z] && placed[y][z] && !m.leq(d[x][z], m.add(v, d[y][z]))) return false;
      if (placed[z][y] && placed[z][x] && !m.leq(d[z][y], m.add(d[z][x], v))) return false;
    }
    return true;
  };

  while (true) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) placed[x][y] = x == y;
    bool dead_end = false;
    for (std::size_t x = 0; x < n && !dead_end; ++x)
      for (std::size_t y = 0; y < n && !dead_end; ++y) {
        if (x == y) continue;
        bool ok = false;
        for (std::size_t t = 0; t < kTriesPerValue * k && !ok; ++t) {
          d[x][y] = rng_() % k;
          ok = consistent(x, y, d[x][y]);
        }
        placed[x][y] = ok;
        dead_end = !ok;
      }
    if (dead_end) continue;
    auto q = validate_qm(default_labels(n), mvs_, d);
    if (!q) throw InternalError("generator placed a table failing " + q.violation().describe());
    return std::move(q).value();
  }
}

}  // namespace mvstop
