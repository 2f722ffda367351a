#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mvstop {

/// A subset of a finite carrier {0, ..., n-1}.
using Subset = boost::dynamic_bitset<std::uint64_t>;

/// A family of subsets of one carrier.
using Family = std::vector<Subset>;

Subset empty_set(std::size_t n);
Subset full_set(std::size_t n);
Subset singleton(std::size_t n, std::size_t x);
Subset subset_of(std::size_t n, const std::vector<std::size_t>& members);

std::vector<std::size_t> members(const Subset& s);

inline bool is_subset(const Subset& a, const Subset& b) { return a.is_subset_of(b); }

/// Orders subsets by cardinality, then by numeric value.
struct SizeThenValue {
  bool operator()(const Subset& a, const Subset& b) const {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  }
};

struct SubsetHash {
  std::size_t operator()(const Subset& s) const;
};

/// Sorts a family by numeric value and drops duplicates.
Family canonical(Family family);

/// Renders `{a,b}` using point labels.
std::string format_subset(const Subset& s, const std::vector<std::string>& labels);

}  // namespace mvstop

namespace mvstop {

/// Re-indexes `s ∩ a` onto the members of `a` in ascending order.
Subset compress(const Subset& s, const Subset& a);
/// Inverse of compress: maps local indices of `a` back onto the carrier.
Subset expand(const Subset& local, const Subset& a);

}  // namespace mvstop
