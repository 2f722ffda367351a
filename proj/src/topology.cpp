#include "mvstop/topology.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <unordered_set>

namespace mvstop {

namespace {

void require_carrier(const Subset& s, std::size_t n, const char* what) {
  if (s.size() != n) throw InputError(std::string(what) + ": subset over the wrong carrier size");
}

Subset preimage(const std::vector<std::size_t>& map, const Subset& target) {
  Subset out(map.size());
  for (std::size_t p = 0; p < map.size(); ++p)
    if (target.test(map[p])) out.set(p);
  return out;
}

}  // namespace

FiniteTopology FiniteTopology::from_minimal(std::vector<Subset> minimal) {
  const auto n = minimal.size();
  for (std::size_t x = 0; x < n; ++x) {
    require_carrier(minimal[x], n, "minimal neighbourhood");
    if (!minimal[x].test(x)) throw InputError("minimal neighbourhood U(x) must contain x");
    for (auto y = minimal[x].find_first(); y != Subset::npos; y = minimal[x].find_next(y))
      if (!minimal[y].is_subset_of(minimal[x]))
        throw InputError("y in U(x) requires U(y) to lie inside U(x)");
  }
  return FiniteTopology(std::move(minimal));
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
  std::vector<Subset> m;
  for (std::size_t x = 0; x < n; ++x) m.push_back(singleton(n, x));
  return FiniteTopology(std::move(m));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
  return FiniteTopology(std::vector<Subset>(n, full_set(n)));
}

bool FiniteTopology::is_open(const Subset& v) const {
  require_carrier(v, size(), "is_open");
  for (auto x = v.find_first(); x != Subset::npos; x = v.find_next(x))
    if (!minimal_[x].is_subset_of(v)) return false;
  return true;
}

Family FiniteTopology::opens(std::size_t limit) const {
  // Every open set is a union of minimal neighbourhoods; grow from ∅.
  std::unordered_set<Subset, SubsetHash> seen;
  std::vector<Subset> work;
  const Subset empty = empty_set(size());
  seen.insert(empty);
  work.push_back(empty);
  while (!work.empty()) {
    Subset v = std::move(work.back());
    work.pop_back();
    for (std::size_t x = 0; x < size(); ++x) {
      if (v.test(x)) continue;
      Subset w = v | minimal_[x];
      if (seen.insert(w).second) {
        if (seen.size() > limit) throw InputError("open-set family exceeds the enumeration limit");
        work.push_back(std::move(w));
      }
    }
  }
  Family out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

FiniteTopology generate_topology(std::size_t n, const Family& subbase) {
  std::vector<Subset> minimal(n, full_set(n));
  for (const auto& s : subbase) {
    require_carrier(s, n, "subbase");
    for (auto x = s.find_first(); x != Subset::npos; x = s.find_next(x)) minimal[x] &= s;
  }
  return FiniteTopology::from_minimal(std::move(minimal));
}

Checked<FiniteTopology> topology_from_opens(std::size_t n, const Family& opens) {
  for (const auto& v : opens) require_carrier(v, n, "open set");
  const Family family = canonical(opens);
  const auto contains = [&](const Subset& s) {
    return std::binary_search(family.begin(), family.end(), s);
  };
  if (!contains(empty_set(n))) return Violation{"topology", {}, "the empty set is not open"};
  if (!contains(full_set(n))) return Violation{"topology", {}, "the whole carrier is not open"};

  auto t = generate_topology(n, family);
  if (t.opens() == family) return t;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!contains(family[i] & family[j]))
        return Violation{"topology", {i, j}, "intersection of two open sets is missing"};
      if (!contains(family[i] | family[j]))
        return Violation{"topology", {i, j}, "union of two open sets is missing"};
    }
  throw InternalError("pairwise-closed family differs from the topology it generates");
}

bool subbase_reduction_equivalent(std::size_t n, const Family& u, const Family& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (std::find(u.begin(), u.end(), v[i]) == u.end())
      throw HypothesisError("member " + std::to_string(i) + " of the sub-family is not in the family");
  for (std::size_t i = 0; i < u.size(); ++i) {
    require_carrier(u[i], n, "subbase");
    Subset cover(n);
    for (const auto& w : v)
      if (w.is_subset_of(u[i])) cover |= w;
    if (cover != u[i])
      throw HypothesisError("member " + std::to_string(i) +
                            " of the family is not a union of sub-family members");
  }
  return generate_topology(n, u) == generate_topology(n, v);
}

NbhdAxioms validate_nbhd_system(const NbhdSystem& b) {
  const auto n = b.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (b.at[x].empty()) throw InputError("B(x) must be non-empty for every point");
    for (const auto& u : b.at[x]) require_carrier(u, n, "neighbourhood");
  }

  NbhdAxioms ax;
  ax.b1 = ax.b2 = ax.b3 = ax.b3_open = true;
  auto fail = [&](bool& flag, Violation v) {
    if (flag) ax.failures.push_back(std::move(v));
    flag = false;
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < b.at[x].size(); ++i)
      if (!b.at[x][i].test(x)) fail(ax.b1, {"B1", {x, i}, "point missing from its neighbourhood"});

  for (std::size_t x = 0; x < n; ++x) {
    const auto& bx = b.at[x];
    for (std::size_t i = 0; i < bx.size(); ++i)
      for (std::size_t j = i + 1; j < bx.size(); ++j) {
        const Subset meet = bx[i] & bx[j];
        const bool ok = std::any_of(bx.begin(), bx.end(),
                                    [&](const Subset& w) { return w.is_subset_of(meet); });
        if (!ok) fail(ax.b2, {"B2", {x, i, j}, "no neighbourhood inside the intersection"});
      }
  }

  // has_inside[y](u): some W ∈ B(y) with W ⊆ u.
  auto has_inside = [&](std::size_t y, const Subset& u) {
    return std::any_of(b.at[y].begin(), b.at[y].end(),
                       [&](const Subset& w) { return w.is_subset_of(u); });
  };

  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < b.at[x].size(); ++i) {
      const auto& u = b.at[x][i];
      bool found = false;
      for (const auto& v : b.at[x]) {
        bool all = true;
        for (auto y = v.find_first(); y != Subset::npos && all; y = v.find_next(y))
          all = has_inside(y, u);
        if (all) {
          found = true;
          break;
        }
      }
      if (!found) fail(ax.b3, {"B3", {x, i}, "no smaller neighbourhood whose points see inside"});

      for (auto y = u.find_first(); y != Subset::npos; y = u.find_next(y))
        if (!has_inside(y, u)) {
          fail(ax.b3_open, {"B3'", {x, i, y}, "a point of the neighbourhood has none inside it"});
          break;
        }
    }
  return ax;
}

FiniteTopology topology_of(const NbhdSystem& b) {
  const auto ax = validate_nbhd_system(b);
  if (!ax.neighbourhood_system())
    throw InputError("not a neighbourhood system: " + ax.failures.front().describe());
  // Under (B1)-(B3) on a finite carrier, ⋂B(x) is itself a member of B(x)
  // and is the smallest open set containing x.
  const auto n = b.size();
  std::vector<Subset> minimal(n, full_set(n));
  for (std::size_t x = 0; x < n; ++x)
    for (const auto& u : b.at[x]) minimal[x] &= u;
  try {
    return FiniteTopology::from_minimal(std::move(minimal));
  } catch (const InputError& e) {
    throw InternalError(std::string("neighbourhood intersections are not coherent: ") + e.what());
  }
}

bool systems_equivalent(const NbhdSystem& a, const NbhdSystem& b) {
  if (a.size() != b.size()) return false;
  auto refines = [](const Family& coarse, const Family& fine) {
    return std::all_of(coarse.begin(), coarse.end(), [&](const Subset& u) {
      return std::any_of(fine.begin(), fine.end(), [&](const Subset& v) { return v.is_subset_of(u); });
    });
  };
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!refines(a.at[x], b.at[x]) || !refines(b.at[x], a.at[x])) return false;
  return true;
}

NbhdSystem minimal_system(const FiniteTopology& t) {
  NbhdSystem b;
  for (const auto& u : t.minimal_neighbourhoods()) b.at.push_back({u});
  return b;
}

FiniteTopology induced_by_maps(std::size_t n, const std::vector<InducingMap>& maps) {
  Family direct;    // preimages of neighbourhoods where available
  Family all_open;  // preimages of every open set
  bool has_system = false;
  for (const auto& m : maps) {
    if (m.map.size() != n) throw InputError("inducing map must be total on the domain");
    const std::size_t target_size =
        std::visit([](const auto& t) { return t.size(); }, m.target);
    for (auto y : m.map)
      if (y >= target_size) throw InputError("inducing map leaves its target carrier");

    if (const auto* t = std::get_if<FiniteTopology>(&m.target)) {
      for (const auto& o : t->opens()) {
        direct.push_back(preimage(m.map, o));
        all_open.push_back(direct.back());
      }
    } else {
      const auto& b = std::get<NbhdSystem>(m.target);
      if (!validate_nbhd_system(b).open_system())
        throw InputError("neighbourhood-system targets must be open neighbourhood systems");
      has_system = true;
      for (const auto& bx : b.at)
        for (const auto& v : bx) direct.push_back(preimage(m.map, v));
      for (const auto& o : topology_of(b).opens()) all_open.push_back(preimage(m.map, o));
    }
  }
  auto t = generate_topology(n, direct);
  if (has_system && !(t == generate_topology(n, all_open)))
    throw InternalError("neighbourhood preimages and open-set preimages generate different topologies");
  return t;
}

FiniteTopology relative_topology(const FiniteTopology& t, const Subset& a) {
  require_carrier(a, t.size(), "relative_topology");
  std::vector<Subset> minimal;
  for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x))
    minimal.push_back(compress(t.minimal_neighbourhood(x), a));
  return FiniteTopology::from_minimal(std::move(minimal));
}

FiniteTopology product_topology(const FiniteTopology& a, const FiniteTopology& b) {
  const auto na = a.size();
  const auto nb = b.size();
  std::vector<Subset> minimal;
  minimal.reserve(na * nb);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      Subset box(na * nb);
      const auto& ux = a.minimal_neighbourhood(x);
      const auto& uy = b.minimal_neighbourhood(y);
      for (auto i = ux.find_first(); i != Subset::npos; i = ux.find_next(i))
        for (auto j = uy.find_first(); j != Subset::npos; j = uy.find_next(j)) box.set(i * nb + j);
      minimal.push_back(std::move(box));
    }
  return FiniteTopology::from_minimal(std::move(minimal));
}

std::vector<Subset> min_neighbourhoods(const FiniteTopology& t) { return t.minimal_neighbourhoods(); }

namespace {

void require_open_cover(const FiniteTopology& t, const Family& cover) {
  Subset covered(t.size());
  for (std::size_t i = 0; i < cover.size(); ++i) {
    require_carrier(cover[i], t.size(), "cover");
    if (!t.is_open(cover[i])) throw InputError("cover member " + std::to_string(i) + " is not open");
    covered |= cover[i];
  }
  if (!covered.all()) throw InputError("cover does not cover the carrier");
}

}  // namespace

bool is_open_via_cover(const FiniteTopology& t, const Family& cover, const Subset& v) {
  require_open_cover(t, cover);
  require_carrier(v, t.size(), "is_open_via_cover");
  bool criterion = true;
  for (const auto& c : cover) {
    const auto rel = relative_topology(t, c);
    std::size_t local = 0;
    for (auto x = c.find_first(); x != Subset::npos && criterion; x = c.find_next(x), ++local) {
      if (!v.test(x)) continue;
      // The smallest relatively open set around x must already lie in v.
      criterion = expand(rel.minimal_neighbourhood(local), c).is_subset_of(v);
    }
    if (!criterion) break;
  }
  if (criterion != t.is_open(v)) throw InternalError("cover criterion disagrees with openness");
  return criterion;
}

CoverData point_finite_refinement(const FiniteTopology& t, const Family& cover) {
  require_open_cover(t, cover);
  std::vector<std::size_t> first;  // index of the first occurrence of each distinct member
  for (std::size_t i = 0; i < cover.size(); ++i) {
    bool dup = false;
    for (auto j : first) dup = dup || cover[j] == cover[i];
    if (!dup) first.push_back(i);
  }

  std::vector<std::size_t> order = first;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return SizeThenValue{}(cover[a], cover[b]);
  });
  std::vector<char> kept(cover.size(), 0);
  for (auto i : first) kept[i] = 1;
  for (auto i : order) {
    Subset rest(t.size());
    for (auto j : first)
      if (kept[j] && j != i) rest |= cover[j];
    if (rest.all()) kept[i] = 0;
  }

  CoverData out;
  out.cover = cover;
  for (auto i : first)
    if (kept[i]) {
      out.refinement.push_back(cover[i]);
      out.assignment.push_back(i);
    }
  return out;
}

std::vector<FiniteTopology> enumerate_topologies(std::size_t n) {
  if (n > 4) throw InputError("topology enumeration supports at most 4 points");
  const std::size_t subsets = std::size_t{1} << n;
  const std::uint64_t families = std::uint64_t{1} << subsets;
  std::vector<Subset> all;
  for (std::size_t s = 0; s < subsets; ++s) all.emplace_back(n, s);

  std::set<std::vector<Subset>> seen;
  for (std::uint64_t code = 0; code < families; ++code) {
    Family subbase;
    for (std::size_t s = 0; s < subsets; ++s)
      if ((code >> s) & 1U) subbase.push_back(all[s]);
    seen.insert(generate_topology(n, subbase).minimal_neighbourhoods());
  }
  std::vector<FiniteTopology> out;
  for (const auto& m : seen) out.push_back(FiniteTopology::from_minimal(m));
  return out;
}

std::size_t count_closed_families(std::size_t n) {
  if (n > 4) throw InputError("topology enumeration supports at most 4 points");
  const std::uint32_t subsets = 1U << n;
  const std::uint32_t full = subsets - 1;
  if (n == 0) return 1;
  // Families are bitmasks over subset codes; ∅ (code 0) and X are forced.
  const std::uint32_t free_codes = subsets - 2;
  std::size_t count = 0;
  for (std::uint32_t code = 0; code < (1U << free_codes); ++code) {
    const std::uint64_t family = 1ULL | (1ULL << full) | (std::uint64_t{code} << 1);
    bool closed = true;
    for (std::uint32_t a = 0; a < subsets && closed; ++a) {
      if (!((family >> a) & 1U)) continue;
      for (std::uint32_t b = a + 1; b < subsets; ++b) {
        if (!((family >> b) & 1U)) continue;
        if (!((family >> (a | b)) & 1U) || !((family >> (a & b)) & 1U)) {
          closed = false;
          break;
        }
      }
    }
    if (closed) ++count;
  }
  return count;
}

}  // namespace mvstop
