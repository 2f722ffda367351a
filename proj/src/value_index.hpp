#pragma once

#include <cstdint>
#include <vector>

#include "mvstop/subset.hpp"

namespace mvstop::detail {

// For a distance matrix with values in {0..k-1}: row(x, a) = {y : d(x,y) = a}.
class ValueIndex {
 public:
  ValueIndex(const std::vector<std::uint16_t>& d, std::size_t n, std::size_t k)
      : n_(n), k_(k), rows_(n * k, Subset(n)) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) rows_[x * k + d[x * n + y]].set(y);
  }

  const Subset& row(std::size_t x, std::size_t a) const { return rows_[x * k_ + a]; }

  // reach[a * k + b] = {z : some y has d(x,y) = a and d(y,z) = b}.
  std::vector<Subset> two_step(const std::vector<std::uint16_t>& d, std::size_t x) const {
    std::vector<Subset> reach(k_ * k_, Subset(n_));
    for (std::size_t y = 0; y < n_; ++y) {
      const std::size_t a = d[x * n_ + y];
      for (std::size_t b = 0; b < k_; ++b) reach[a * k_ + b] |= rows_[y * k_ + b];
    }
    return reach;
  }

 private:
  std::size_t n_;
  std::size_t k_;
  std::vector<Subset> rows_;
};

}  // namespace mvstop::detail
