#pragma once

#include <string>
#include <vector>

#include "mvstop/io.hpp"
#include "mvstop/qmetric.hpp"

namespace fixtures {

inline std::string data(const std::string& name) { return std::string(MVSTOP_DATA_DIR) + "/" + name; }

inline mvstop::MvsRef max3() { return mvstop::share(mvstop::max_mvs(3)); }
inline mvstop::MvsRef max2() { return mvstop::share(mvstop::max_mvs(2)); }
inline mvstop::MvsRef collapse() { return mvstop::share(mvstop::collapse_mvs()); }

inline mvstop::QmSpace space(const mvstop::MvsRef& m, const std::vector<std::vector<mvstop::Element>>& d,
                             std::vector<std::string> labels = {}) {
  if (labels.empty()) labels = mvstop::default_labels(d.size());
  return mvstop::validate_qm(std::move(labels), m, d).value();
}

/// Three 3-cliques over ({0,1,2},max): 1 inside a clique, 2 across.
inline mvstop::QmSpace clique9() {
  std::vector<std::vector<mvstop::Element>> d(9, std::vector<mvstop::Element>(9));
  for (std::size_t x = 0; x < 9; ++x)
    for (std::size_t y = 0; y < 9; ++y) d[x][y] = x == y ? 0 : (x / 3 == y / 3 ? 1 : 2);
  return space(max3(), d);
}

/// Three points at mutual distance 1 over ({0,1},max).
inline mvstop::QmSpace uniform3() { return space(max2(), {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}}); }

inline mvstop::FiniteTopology sierpinski() {
  return mvstop::FiniteTopology::from_minimal({mvstop::subset_of(2, {0}), mvstop::subset_of(2, {0, 1})});
}

}  // namespace fixtures
