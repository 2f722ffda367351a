#pragma once

// Brute-force reference implementations used to freeze expected values.
// Everything here works from the literal definitions on plain vectors and
// bit masks and shares no code with the library beyond type conversions.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mvstop/qmetric.hpp"
#include "mvstop/quniform.hpp"
#include "mvstop/topology.hpp"

namespace oracle {

using Mask = std::uint32_t;
using Table = std::vector<std::vector<std::size_t>>;
using Opens = std::set<Mask>;

inline Mask full(std::size_t n) { return n == 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline bool has(Mask s, std::size_t x) { return (s >> x) & 1U; }
inline bool sub(Mask a, Mask b) { return (a & ~b) == 0; }

inline Mask to_mask(const mvstop::Subset& s) {
  Mask m = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) m |= Mask{1} << i;
  return m;
}

inline Opens to_opens(const mvstop::FiniteTopology& t) {
  Opens out;
  for (const auto& o : t.opens()) out.insert(to_mask(o));
  return out;
}

// ---- metric value sets -----------------------------------------------------

inline bool leq(const Table& t, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (t[a][c] == b) return true;
  return false;
}

inline bool lt(const Table& t, std::size_t e, std::size_t a, std::size_t b) {
  for (std::size_t c = 0; c < t.size(); ++c)
    if (c != e && t[a][c] == b) return true;
  return false;
}

/// Name of the first failing axiom, in the order (M1)..(M4).
inline std::optional<std::string> mvs_violation(const Table& t, std::size_t e) {
  const auto k = t.size();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t c = 0; c < k; ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return "M1";
  for (std::size_t a = 0; a < k; ++a)
    if (t[e][a] != a || t[a][e] != a) return "M2";
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (t[a][b] == e && (a != e || b != e)) return "M3";
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a == e || b == e) continue;
      bool found = false;
      for (std::size_t c = 0; c < k && !found; ++c)
        found = c != e && leq(t, c, a) && leq(t, c, b);
      if (!found) return "M4";
    }
  return std::nullopt;
}

inline bool commutative(const Table& t) {
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = 0; b < t.size(); ++b)
      if (t[a][b] != t[b][a]) return false;
  return true;
}

inline bool atom_free(const Table& t, std::size_t e, bool strictly) {
  if (!commutative(t)) return false;
  for (std::size_t m = 0; m < t.size(); ++m) {
    if (m == e) continue;
    bool found = false;
    for (std::size_t n = 0; n < t.size() && !found; ++n)
      found = n != e && lt(t, e, n, m) && (!strictly || !lt(t, e, m, n));
    if (!found) return false;
  }
  return true;
}

/// Number of tables on {0..k-1} with neutral 0 passing (M1)-(M4), by
/// scanning every k^(k*k) table whose neutral row and column are right.
inline std::size_t count_mvs(std::size_t k) {
  const std::size_t cells = (k - 1) * (k - 1);
  std::size_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= k;
  std::size_t count = 0;
  Table t(k, std::vector<std::size_t>(k));
  for (std::size_t a = 0; a < k; ++a) t[0][a] = t[a][0] = a;
  for (std::size_t code = 0; code < total; ++code) {
    auto c = code;
    for (std::size_t a = 1; a < k; ++a)
      for (std::size_t b = 1; b < k; ++b) {
        t[a][b] = c % k;
        c /= k;
      }
    if (!mvs_violation(t, 0)) ++count;
  }
  return count;
}

// ---- topologies ------------------------------------------------------------

/// Worklist closure of a subbase under pairwise ∩ and ∪, with ∅ and X.
inline Opens closure(std::size_t n, const std::vector<Mask>& subbase) {
  Opens fam{0, full(n)};
  std::vector<Mask> work{0, full(n)};
  for (auto s : subbase)
    if (fam.insert(s).second) work.push_back(s);
  while (!work.empty()) {
    const auto s = work.back();
    work.pop_back();
    const std::vector<Mask> current(fam.begin(), fam.end());
    for (auto t : current)
      for (auto u : {s & t, s | t})
        if (fam.insert(u).second) work.push_back(u);
  }
  return fam;
}

/// Literal definition: V is open iff every x in V has a member of B(x)
/// inside V. Scans all 2^n subsets.
inline Opens opens_of_system(std::size_t n, const std::vector<std::vector<Mask>>& b) {
  Opens out;
  for (Mask v = 0; v <= full(n); ++v) {
    bool open = true;
    for (std::size_t x = 0; x < n && open; ++x) {
      if (!has(v, x)) continue;
      bool inside = false;
      for (auto u : b[x]) inside = inside || sub(u, v);
      open = inside;
    }
    if (open) out.insert(v);
    if (v == full(n)) break;
  }
  return out;
}

/// Smallest open set containing x, from an explicit family.
inline Mask smallest_open(std::size_t n, const Opens& opens, std::size_t x) {
  Mask m = full(n);
  for (auto o : opens)
    if (has(o, x)) m &= o;
  return m;
}

/// Product of two explicit topologies: V is open iff it contains a box of
/// smallest neighbourhoods around each of its points. Point (x, y) has
/// index x * nb + y.
inline Opens product_opens(std::size_t na, const Opens& a, std::size_t nb, const Opens& b) {
  const auto n = na * nb;
  std::vector<Mask> box(n);
  for (std::size_t x = 0; x < na; ++x)
    for (std::size_t y = 0; y < nb; ++y) {
      const auto ux = smallest_open(na, a, x);
      const auto uy = smallest_open(nb, b, y);
      Mask m = 0;
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
          if (has(ux, i) && has(uy, j)) m |= Mask{1} << (i * nb + j);
      box[x * nb + y] = m;
    }
  std::vector<std::vector<Mask>> sys(n);
  for (std::size_t p = 0; p < n; ++p) sys[p] = {box[p]};
  return opens_of_system(n, sys);
}

/// Relative topology as the trace family, re-indexed onto a's members.
inline Opens trace(std::size_t n, const Opens& opens, Mask a) {
  Opens out;
  for (auto o : opens) {
    Mask local = 0;
    std::size_t r = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (has(a, x)) {
        if (has(o, x)) local |= Mask{1} << r;
        ++r;
      }
    out.insert(local);
  }
  return out;
}

/// All topologies on n <= 4 points as explicit families: every family of
/// subsets that contains ∅ and X and is closed under ∪ and ∩.
inline std::vector<Opens> all_topologies(std::size_t n) {
  const std::size_t subsets = std::size_t{1} << n;
  std::vector<Opens> out;
  for (std::uint64_t fam = 0; fam < (std::uint64_t{1} << subsets); ++fam) {
    if (!((fam >> 0) & 1) || !((fam >> (subsets - 1)) & 1)) continue;
    bool closed = true;
    for (std::size_t s = 0; s < subsets && closed; ++s)
      for (std::size_t t = 0; t < subsets && closed; ++t)
        if (((fam >> s) & 1) && ((fam >> t) & 1))
          closed = ((fam >> (s | t)) & 1) && ((fam >> (s & t)) & 1);
    if (!closed) continue;
    Opens o;
    for (std::size_t s = 0; s < subsets; ++s)
      if ((fam >> s) & 1) o.insert(static_cast<Mask>(s));
    out.push_back(o);
  }
  return out;
}

// ---- quasimetric spaces ------------------------------------------------------

struct Space {
  Table add;
  std::size_t e = 0;
  Table d;
};

inline Space plain(const mvstop::QmSpace& q) {
  Space s{q.values().rows(), q.values().neutral(), q.rows()};
  return s;
}

inline bool is_quasimetric(const Space& s) {
  const auto n = s.d.size();
  for (std::size_t x = 0; x < n; ++x)
    if (s.d[x][x] != s.e) return false;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (!leq(s.add, s.d[x][z], s.add[s.d[x][y]][s.d[y][z]])) return false;
  return true;
}

inline Mask ball(const Space& s, std::size_t x, std::size_t m, bool closed) {
  Mask b = 0;
  for (std::size_t y = 0; y < s.d.size(); ++y)
    if (closed ? leq(s.add, s.d[x][y], m) : lt(s.add, s.e, s.d[x][y], m)) b |= Mask{1} << y;
  return b;
}

inline std::vector<std::vector<Mask>> ball_system(const Space& s, bool closed) {
  std::vector<std::vector<Mask>> b(s.d.size());
  for (std::size_t x = 0; x < s.d.size(); ++x)
    for (std::size_t m = 0; m < s.add.size(); ++m)
      if (m != s.e) b[x].push_back(ball(s, x, m, closed));
  return b;
}

inline Opens induced(const Space& s) { return opens_of_system(s.d.size(), ball_system(s, false)); }

/// Fullness: every value is attained.
inline bool full_space(const Space& s) {
  std::vector<bool> hit(s.add.size(), false);
  for (const auto& row : s.d)
    for (auto v : row) hit[v] = true;
  for (bool h : hit)
    if (!h) return false;
  return true;
}

/// Condition (C), scanned over every triple.
inline bool convex(const Space& s) {
  const auto n = s.d.size();
  const auto k = s.add.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) {
          if (s.add[a][b] != s.d[x][y]) continue;
          bool mid = false;
          for (std::size_t z = 0; z < n && !mid; ++z) mid = s.d[x][z] == a && s.d[z][y] == b;
          if (!mid) return false;
        }
  return true;
}

// ---- relations -----------------------------------------------------------------

using Relation = std::vector<std::vector<bool>>;

inline Relation relation(const mvstop::Entourage& u) {
  Relation r(u.size(), std::vector<bool>(u.size()));
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y) r[x][y] = u.test(x, y);
  return r;
}

/// Boolean matrix product in the "right operand first" convention:
/// (a∘b)[x][z] = OR_y b[x][y] AND a[y][z].
inline Relation compose(const Relation& a, const Relation& b) {
  const auto n = a.size();
  Relation out(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (b[x][y] && a[y][z]) out[x][z] = true;
  return out;
}

}  // namespace oracle
