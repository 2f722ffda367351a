#include "mvstop/mvs.hpp"

#include <algorithm>
#include <set>

namespace mvstop {

MvsTable::MvsTable(std::vector<std::string> labels, Element neutral, std::vector<Element> table)
    : labels_(std::move(labels)), neutral_(neutral), table_(std::move(table)) {
  const auto k = size();
  leq_.assign(k * k, 0);
  lt_.assign(k * k, 0);
  for (Element a = 0; a < k; ++a)
    for (Element c = 0; c < k; ++c) {
      const Element b = add(a, c);
      leq_[a * k + b] = 1;
      if (c != neutral_) lt_[a * k + b] = 1;
    }
}

std::optional<Element> MvsTable::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Element>(it - labels_.begin());
}

std::vector<Element> MvsTable::nonzero() const {
  std::vector<Element> out;
  for (Element a = 0; a < size(); ++a)
    if (a != neutral_) out.push_back(a);
  return out;
}

std::vector<std::vector<Element>> MvsTable::rows() const {
  std::vector<std::vector<Element>> out(size(), std::vector<Element>(size()));
  for (Element a = 0; a < size(); ++a)
    for (Element b = 0; b < size(); ++b) out[a][b] = add(a, b);
  return out;
}

Checked<MvsTable> validate_mvs(std::vector<std::string> labels, Element neutral,
                               const std::vector<std::vector<Element>>& table) {
  const auto k = labels.size();
  if (k < 2) throw InputError("an MVS needs at least two elements, got " + std::to_string(k));
  if (std::set<std::string>(labels.begin(), labels.end()).size() != k)
    throw InputError("duplicate element labels");
  if (neutral >= k) throw InputError("neutral element out of range");
  if (table.size() != k) throw InputError("table must have one row per element");
  std::vector<Element> flat;
  flat.reserve(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    if (table[i].size() != k) throw InputError("table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < k; ++j) {
      if (table[i][j] >= k)
        throw InputError("table entry (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range");
      flat.push_back(table[i][j]);
    }
  }
  auto at = [&](Element a, Element b) { return flat[a * k + b]; };

  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      for (Element c = 0; c < k; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          return Violation{"M1", {a, b, c}, "(a+b)+c != a+(b+c)"};

  for (Element a = 0; a < k; ++a)
    if (at(neutral, a) != a || at(a, neutral) != a)
      return Violation{"M2", {neutral, a}, "declared neutral element does not act as identity"};

  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b)
      if (at(a, b) == neutral && (a != neutral || b != neutral))
        return Violation{"M3", {a, b}, "a+b = e with a or b != e"};

  MvsTable m(std::move(labels), neutral, std::move(flat));
  const auto star = m.nonzero();
  for (auto a : star)
    for (auto b : star) {
      bool found = false;
      for (auto c : star)
        if (m.leq(c, a) && m.leq(c, b)) {
          found = true;
          break;
        }
      if (!found) return Violation{"M4", {a, b}, "no common left part in M*"};
    }
  return m;
}

bool is_commutative(const MvsTable& m) {
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = a + 1; b < m.size(); ++b)
      if (m.add(a, b) != m.add(b, a)) return false;
  return true;
}

namespace {

bool every_nonzero_has_smaller(const MvsTable& m, bool strict) {
  if (!is_commutative(m)) return false;
  const auto star = m.nonzero();
  for (auto a : star) {
    bool found = false;
    for (auto n : star)
      if (m.lt(n, a) && (!strict || !m.lt(a, n))) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_atom_free(const MvsTable& m) { return every_nonzero_has_smaller(m, false); }
bool is_strictly_atom_free(const MvsTable& m) { return every_nonzero_has_smaller(m, true); }

MvsTable max_mvs(std::size_t k) {
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> t(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i) {
    labels.push_back(std::to_string(i));
    for (std::size_t j = 0; j < k; ++j) t[i][j] = std::max(i, j);
  }
  return validate_mvs(std::move(labels), 0, t).value();
}

MvsTable collapse_mvs() {
  std::vector<std::vector<Element>> t = {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}};
  return validate_mvs({"0", "1", "2"}, 0, t).value();
}

bool MvsHom::surjective() const {
  std::vector<char> hit(target_->size(), 0);
  for (auto v : map_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Checked<MvsHom> validate_hom(std::vector<Element> map, MvsRef source, MvsRef target) {
  if (!source || !target) throw InputError("homomorphism needs source and target");
  if (map.size() != source->size()) throw InputError("map must be total on the source carrier");
  for (auto v : map)
    if (v >= target->size()) throw InputError("map value out of target range");

  for (Element a = 0; a < source->size(); ++a) {
    const bool maps_to_e = map[a] == target->neutral();
    const bool is_e = a == source->neutral();
    if (maps_to_e != is_e) return Violation{"H1", {a}, "h(m) = e must hold exactly for m = e"};
  }
  for (Element a = 0; a < source->size(); ++a)
    for (Element b = 0; b < source->size(); ++b)
      if (map[source->add(a, b)] != target->add(map[a], map[b]))
        return Violation{"H2", {a, b}, "h(m+n) != h(m)+h(n)"};
  return MvsHom(std::move(map), std::move(source), std::move(target));
}

MvsTable adjoin_infinity(const MvsTable& m) {
  const auto k = m.size();
  std::string top = "inf";
  while (m.find(top)) top += "'";
  auto labels = m.labels();
  labels.push_back(top);
  std::vector<std::vector<Element>> t(k + 1, std::vector<Element>(k + 1, k));
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) t[a][b] = m.add(a, b);
  auto out = validate_mvs(std::move(labels), m.neutral(), t);
  if (!out) throw InternalError("adjoining infinity broke an axiom: " + out.violation().describe());
  return std::move(out).value();
}

Element n_times(const MvsTable& m, Element a, std::size_t n) {
  if (n == 0) throw InputError("n_times needs a positive multiplier");
  Element acc = a;
  for (std::size_t i = 1; i < n; ++i) acc = m.add(acc, a);
  return acc;
}

std::optional<Element> find_subdivision(const MvsTable& m, Element target, std::size_t n) {
  if (target >= m.size() || target == m.neutral())
    throw InputError("find_subdivision target must lie in M*");
  for (auto c : m.nonzero())
    if (m.leq(n_times(m, c, n), target)) return c;
  return std::nullopt;
}

std::optional<Element> common_lower_bound(const MvsTable& m, const std::vector<Element>& xs) {
  if (xs.empty()) throw InputError("common_lower_bound needs at least one element");
  for (auto x : xs)
    if (x >= m.size() || x == m.neutral()) throw InputError("common_lower_bound inputs must lie in M*");
  for (auto c : m.nonzero())
    if (std::all_of(xs.begin(), xs.end(), [&](Element x) { return m.leq(c, x); })) return c;
  return std::nullopt;
}

}  // namespace mvstop
