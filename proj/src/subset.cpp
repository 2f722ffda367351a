#include "mvstop/subset.hpp"

#include <algorithm>

namespace mvstop {

Subset empty_set(std::size_t n) { return Subset(n); }

Subset full_set(std::size_t n) {
  Subset s(n);
  s.set();
  return s;
}

Subset singleton(std::size_t n, std::size_t x) {
  Subset s(n);
  s.set(x);
  return s;
}

Subset subset_of(std::size_t n, const std::vector<std::size_t>& xs) {
  Subset s(n);
  for (auto x : xs) s.set(x);
  return s;
}

std::vector<std::size_t> members(const Subset& s) {
  std::vector<std::size_t> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

std::size_t SubsetHash::operator()(const Subset& s) const {
  std::size_t h = s.size() * 0x9e3779b97f4a7c15ULL;
  std::vector<std::uint64_t> blocks;
  boost::to_block_range(s, std::back_inserter(blocks));
  for (auto b : blocks) h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

Family canonical(Family family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

std::string format_subset(const Subset& s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (!first) out += ",";
    out += i < labels.size() ? labels[i] : std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace mvstop

namespace mvstop {

Subset compress(const Subset& s, const Subset& a) {
  Subset out(a.count());
  std::size_t local = 0;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i), ++local)
    if (s.test(i)) out.set(local);
  return out;
}

Subset expand(const Subset& local, const Subset& a) {
  Subset out(a.size());
  std::size_t j = 0;
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i), ++j)
    if (local.test(j)) out.set(i);
  return out;
}

}  // namespace mvstop
