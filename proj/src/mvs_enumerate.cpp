#include <algorithm>
#include <future>
#include <numeric>

#include "mvstop/mvs.hpp"

namespace mvstop {

namespace {

constexpr Element kUnset = static_cast<Element>(-1);

// Backtracking over the M* x M* block of the table; row and column 0 are
// fixed by (M2). Sums of non-neutral elements never hit 0, by (M3).
class TableSearch {
 public:
  TableSearch(std::size_t k, Element first_cell) : k_(k), t_(k * k, kUnset) {
    for (Element a = 0; a < k; ++a) {
      t_[a] = a;
      t_[a * k] = a;
    }
    t_[k + 1] = first_cell;
  }

  std::vector<std::vector<std::vector<Element>>> run() {
    if (consistent()) descend(1);
    return std::move(found_);
  }

 private:
  Element& cell(Element a, Element b) { return t_[a * k_ + b]; }

  bool consistent() const {
    for (Element a = 1; a < k_; ++a)
      for (Element b = 1; b < k_; ++b) {
        const Element ab = t_[a * k_ + b];
        if (ab == kUnset) continue;
        for (Element c = 1; c < k_; ++c) {
          const Element bc = t_[b * k_ + c];
          if (bc == kUnset) continue;
          const Element lhs = t_[ab * k_ + c];
          const Element rhs = t_[a * k_ + bc];
          if (lhs != kUnset && rhs != kUnset && lhs != rhs) return false;
        }
      }
    return true;
  }

  void descend(std::size_t pos) {
    const std::size_t cells = (k_ - 1) * (k_ - 1);
    if (pos == cells) {
      std::vector<std::vector<Element>> rows(k_, std::vector<Element>(k_));
      for (Element a = 0; a < k_; ++a)
        for (Element b = 0; b < k_; ++b) rows[a][b] = t_[a * k_ + b];
      found_.push_back(std::move(rows));
      return;
    }
    const Element a = 1 + pos / (k_ - 1);
    const Element b = 1 + pos % (k_ - 1);
    for (Element v = 1; v < k_; ++v) {
      cell(a, b) = v;
      if (consistent()) descend(pos + 1);
    }
    cell(a, b) = kUnset;
  }

  std::size_t k_;
  std::vector<Element> t_;
  std::vector<std::vector<std::vector<Element>>> found_;
};

std::vector<std::vector<Element>> transport(const std::vector<std::vector<Element>>& t,
                                            const std::vector<Element>& perm) {
  const auto k = t.size();
  std::vector<std::vector<Element>> out(k, std::vector<Element>(k));
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) out[perm[a]][perm[b]] = perm[t[a][b]];
  return out;
}

bool is_canonical(const std::vector<std::vector<Element>>& t) {
  std::vector<Element> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin() + 1, perm.end()))
    if (transport(t, perm) < t) return false;
  return true;
}

}  // namespace

std::vector<EnumeratedMvs> enumerate_mvs(std::size_t k, bool up_to_iso) {
  if (k < 2 || k > 5) throw InputError("enumerate_mvs supports orders 2..5");

  // One shard per value of the (1,1) cell.
  std::vector<std::future<std::vector<std::vector<std::vector<Element>>>>> shards;
  for (Element v = 1; v < k; ++v)
    shards.push_back(std::async(std::launch::async, [k, v] { return TableSearch(k, v).run(); }));

  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));

  std::vector<EnumeratedMvs> out;
  for (auto& shard : shards) {
    for (auto& rows : shard.get()) {
      if (up_to_iso && !is_canonical(rows)) continue;
      auto checked = validate_mvs(labels, 0, rows);
      if (!checked) continue;  // associative tables failing (M4)
      EnumeratedMvs e{std::move(checked).value()};
      e.commutative = is_commutative(e.table);
      e.atom_free = is_atom_free(e.table);
      e.strictly_atom_free = is_strictly_atom_free(e.table);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace mvstop

namespace mvstop {

std::vector<MvsTable> enumerate_mvs_exhaustive(std::size_t k) {
  if (k < 2 || k > 4) throw InputError("exhaustive MVS scan supports orders 2..4");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  const std::size_t cells = (k - 1) * (k - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= k;

  std::vector<MvsTable> out;
  std::vector<std::vector<Element>> rows(k, std::vector<Element>(k));
  for (Element a = 0; a < k; ++a) rows[0][a] = rows[a][0] = a;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t pos = 0; pos < cells; ++pos, c /= k)
      rows[1 + pos / (k - 1)][1 + pos % (k - 1)] = c % k;
    auto checked = validate_mvs(labels, 0, rows);
    if (checked) out.push_back(std::move(checked).value());
  }
  return out;
}

}  // namespace mvstop
