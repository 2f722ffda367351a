#include "mvstop/character.hpp"

#include <algorithm>
#include <map>

#include "value_index.hpp"

namespace mvstop {

namespace {

const char* kFull = "embedding into a full space";
const char* kConvex = "embedding into a convex space";
const char* kFullConvex = "embedding into a full convex space";
const char* kEntourageMvs = "entourage value set of a full convex space";
const char* kMetrize = "metrization from a (Q1)-(Q3) base";
const char* kRoundtrip = "characterization roundtrip";

QmSpace build(std::vector<std::string> labels, const MvsRef& m,
              const std::vector<std::vector<Element>>& d, const char* anchor) {
  auto checked = validate_qm(std::move(labels), m, d);
  if (!checked)
    throw TheoremFailure(std::string(anchor) + ": constructed function is not a quasimetric: " +
                         checked.violation().describe());
  return std::move(checked).value();
}

// (a, b) with a + b = c, for every c.
std::vector<std::vector<std::pair<Element, Element>>> decompositions(const MvsTable& m) {
  std::vector<std::vector<std::pair<Element, Element>>> out(m.size());
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b) out[m.add(a, b)].emplace_back(a, b);
  return out;
}

std::vector<std::uint16_t> flat_matrix(const QmSpace& q) {
  std::vector<std::uint16_t> d(q.size() * q.size());
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) d[x * q.size() + y] = static_cast<std::uint16_t>(q.d(x, y));
  return d;
}

bool restriction_matches(const QmSpace& big, const std::vector<std::size_t>& inclusion, const QmSpace& small) {
  for (std::size_t x = 0; x < small.size(); ++x)
    for (std::size_t y = 0; y < small.size(); ++y)
      if (big.d(inclusion[x], inclusion[y]) != small.d(x, y)) return false;
  return true;
}

// The relative topology of the image of `inclusion` in `big`, transported
// back along the inclusion, equals `small`.
bool embeds_topologically(const FiniteTopology& small, const FiniteTopology& big,
                          const std::vector<std::size_t>& inclusion) {
  Subset image(big.size());
  for (auto p : inclusion) image.set(p);
  if (image.count() != inclusion.size()) return false;
  const auto rel = relative_topology(big, image);
  std::vector<std::size_t> rank(big.size(), 0);
  std::size_t r = 0;
  for (auto p = image.find_first(); p != Subset::npos; p = image.find_next(p)) rank[p] = r++;
  for (std::size_t x = 0; x < small.size(); ++x) {
    Subset mapped(inclusion.size());
    const auto& u = small.minimal_neighbourhood(x);
    for (auto y = u.find_first(); y != Subset::npos; y = u.find_next(y)) mapped.set(rank[inclusion[y]]);
    if (mapped != rel.minimal_neighbourhood(rank[inclusion[x]])) return false;
  }
  return true;
}

struct ValueFamily {
  std::vector<Entourage> family;        // [0] = U0
  std::vector<std::size_t> pair_index;  // (x, y) ↦ index of U_{x,y}
  MvsTable table;
};

// Builds (V, +) from U0 and V*. Clauses land in `r`; the first failing
// structural or (Q1)-(Q3) condition comes back as a Violation.
Checked<ValueFamily> build_value_family(const Entourage& u0, std::vector<Entourage> star,
                                        std::vector<std::string> names, Report& r, const char* anchor) {
  const auto n = u0.size();
  std::vector<Entourage> family{u0};
  std::vector<std::string> labels{names.front()};
  for (std::size_t i = 0; i < star.size(); ++i) {
    if (star[i].size() != n) throw InputError("base member over the wrong carrier");
    if (std::find(family.begin() + 1, family.end(), star[i]) == family.end()) {
      family.push_back(star[i]);
      labels.push_back(names.at(i + 1));
    }
  }
  const std::size_t k = family.size();
  if (k < 2) return Violation{"Q2", {}, "V* is empty, so V has fewer than two elements"};

  if (!u0.contains_diagonal()) return Violation{"U0", {}, "U0 does not contain the diagonal"};
  r.check(anchor, "U0 contains the diagonal", true);
  for (std::size_t i = 1; i < k; ++i)
    if (!u0.is_subset_of(family[i]) || u0 == family[i])
      return Violation{"U0", {i}, "U0 is not a proper subset of " + labels[i]};
  r.check(anchor, "U0 is a proper subset of every member of V*", true);
  Entourage cover(n);
  for (std::size_t i = 1; i < k; ++i) cover = cover | family[i];
  if (!(cover == Entourage::full(n))) return Violation{"cover", {}, "the union of V* is not X×X"};
  r.check(anchor, "the union of V* is X×X", true);

  ValueFamily out{family, std::vector<std::size_t>(n * n, 0), MvsTable(max_mvs(2))};
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (u0.test(x, y)) continue;
      Entourage meet = Entourage::full(n);
      for (std::size_t i = 1; i < k; ++i)
        if (family[i].test(x, y)) meet = meet & family[i];
      const auto it = std::find(family.begin() + 1, family.end(), meet);
      if (it == family.end())
        return Violation{"Q1", {x, y}, "U_{x,y} is not a member of V*"};
      out.pair_index[x * n + y] = static_cast<std::size_t>(it - family.begin());
    }
  for (std::size_t i = 1; i < k; ++i)
    if (std::find(out.pair_index.begin(), out.pair_index.end(), i) == out.pair_index.end())
      return Violation{"Q1", {i}, labels[i] + " is no U_{x,y}"};
  r.check(anchor, "(Q1) V* = {U_{x,y} : (x,y) not in U0}", true);

  std::vector<std::vector<Element>> sums(k, std::vector<Element>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const auto c = compose(family[j], family[i]);  // V∘U for U + V
      Entourage meet = Entourage::full(n);
      bool any = false;
      for (const auto& w : family)
        if (c.is_subset_of(w)) {
          meet = meet & w;
          any = true;
        }
      if (!any) return Violation{"Q2", {i, j}, "no member of V contains V∘U"};
      const auto it = std::find(family.begin(), family.end(), meet);
      if (it == family.end()) return Violation{"Q2", {i, j}, "U + V is not a member of V"};
      sums[i][j] = static_cast<Element>(it - family.begin());
    }
  auto table = validate_mvs(labels, 0, sums);
  if (!table)
    return Violation{"Q2", table.violation().witness, "(V,+) is not an MVS: " + table.violation().describe()};
  r.check(anchor, "(Q2) V is closed under + and (V,+) is an MVS with neutral U0", true);
  out.table = std::move(table).value();

  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (out.table.leq(i, j) != family[i].is_subset_of(family[j]))
        return Violation{"Q3", {i, j}, "U ⊴ V disagrees with U ⊆ V"};
  r.check(anchor, "(Q3) U ⊴ V iff U ⊆ V", true);
  return out;
}

}  // namespace

FullConvexReport full_convex_report(const QmSpace& q, std::size_t max_witnesses) {
  const auto& m = q.values();
  const auto n = q.size();
  const auto k = m.size();
  FullConvexReport rep;

  std::vector<char> hit(k, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) hit[q.d(x, y)] = 1;
  for (Element a = 0; a < k; ++a)
    if (!hit[a]) rep.missing.push_back(a);
  rep.full = rep.missing.empty();

  const auto parts = decompositions(m);
  const auto d = flat_matrix(q);
  const detail::ValueIndex index(d, n, k);
  for (std::size_t x = 0; x < n; ++x) {
    const auto reach = index.two_step(d, x);
    for (std::size_t y = 0; y < n; ++y)
      for (auto [a, b] : parts[q.d(x, y)])
        if (!reach[a * k + b].test(y)) {
          ++rep.unrealized_count;
          if (rep.unrealized.size() < max_witnesses) rep.unrealized.push_back({x, y, a, b});
        }
  }
  rep.convex = rep.unrealized_count == 0;
  return rep;
}

Embedding embed_full(const QmSpace& q) {
  const MvsRef& mref = q.mvs();
  const auto& m = *mref;
  if (!is_commutative(m)) throw HypothesisError("embed_full requires a commutative value set");
  if (q.size() == 0) {
    Embedding out{canonical_metric_function(mref), {}, Report("embed-full")};
    out.report.check(kFull, "the empty space embeds into (M, f_M), which is full",
                     full_convex_report(out.space, 0).full);
    return out;
  }
  const auto n = q.size();
  const auto k = m.size();
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    for (Element a = 0; a < k; ++a) labels.push_back("(" + q.points()[x] + "," + m.label(a) + ")");
  std::vector<std::vector<Element>> d(n * k, std::vector<Element>(n * k));
  for (std::size_t p = 0; p < n * k; ++p)
    for (std::size_t r = 0; r < n * k; ++r)
      d[p][r] = p == r ? m.neutral()
                       : m.add(m.add(p % k, q.d(p / k, r / k)), r % k);

  std::vector<std::size_t> inclusion;
  for (std::size_t x = 0; x < n; ++x) inclusion.push_back(x * k + m.neutral());
  Embedding out{build(labels, mref, d, kFull), inclusion, Report("embed-full")};
  auto& r = out.report;
  r.check(kFull, "f* is a quasimetric on X × M", true);
  r.check(kFull, "f* restricted to X × {e} equals f", restriction_matches(out.space, inclusion, q));
  bool witness = true;
  for (Element a = 0; a < k; ++a) witness = witness && out.space.d(a, m.neutral()) == a;
  r.check(kFull, "f*((x,m),(x,e)) = m for every m", witness);
  r.check(kFull, "f* is onto M", full_convex_report(out.space, 0).full);
  return out;
}

namespace {

struct Quadruple {
  std::size_t from;
  Element first;
  Element second;
  std::size_t to;
};

std::vector<Quadruple> stage_points(const QmSpace& q) {
  const auto& m = q.values();
  const auto parts = decompositions(m);
  std::vector<Quadruple> out;
  for (std::size_t x = 0; x < q.size(); ++x) out.push_back({x, m.neutral(), m.neutral(), x});
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) {
      auto ps = parts[q.d(x, y)];
      std::sort(ps.begin(), ps.end());
      for (auto [a, b] : ps) {
        if (x == y && a == m.neutral() && b == m.neutral()) continue;
        out.push_back({x, a, b, y});
      }
    }
  return out;
}

}  // namespace

std::size_t convexify_stage_size(const QmSpace& q) {
  const auto parts = decompositions(q.values());
  std::size_t count = q.size();
  for (std::size_t x = 0; x < q.size(); ++x)
    for (std::size_t y = 0; y < q.size(); ++y) count += parts[q.d(x, y)].size() - (x == y ? 1 : 0);
  return count;
}

Embedding convexify_stage(const QmSpace& q) {
  const auto& m = q.values();
  if (!is_commutative(m)) throw HypothesisError("convexify_stage requires a commutative value set");
  const auto quads = stage_points(q);
  const auto n = quads.size();
  std::vector<std::string> labels;
  for (std::size_t p = 0; p < n; ++p) {
    const auto& t = quads[p];
    labels.push_back(p < q.size() ? q.points()[p]
                                  : "(" + q.points()[t.from] + "," + m.label(t.first) + "," +
                                        m.label(t.second) + "," + q.points()[t.to] + ")");
  }
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t r = 0; r < n; ++r)
      d[p][r] = p == r ? m.neutral()
                       : m.add(m.add(quads[p].second, q.d(quads[p].to, quads[r].from)), quads[r].first);

  std::vector<std::size_t> inclusion(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) inclusion[x] = x;
  Embedding out{build(labels, q.mvs(), d, kConvex), inclusion, Report("convexify-stage")};
  auto& r = out.report;
  r.check(kConvex, "f2 is a quasimetric on the quadruple set", true);
  r.check(kConvex, "f2((x,e,e,x),(y,e,e,y)) = f(x,y)", restriction_matches(out.space, inclusion, q));

  // Every decomposition of every old distance is realized by its own
  // quadruple: f2(x, (x,a,b,y)) = a and f2((x,a,b,y), y) = b.
  bool realized = true;
  std::string witness;
  for (std::size_t p = 0; p < n && realized; ++p) {
    const auto& t = quads[p];
    if (out.space.d(t.from, p) != t.first || out.space.d(p, t.to) != t.second) {
      realized = false;
      witness = labels[p];
    }
  }
  r.check(kConvex, "every decomposition of an old distance has a stage midpoint", realized, witness);
  r.info(kConvex, "stage size", std::to_string(q.size()) + " -> " + std::to_string(n) + " points");
  return out;
}

ConvexifyResult convexify_until(const QmSpace& q, std::size_t max_stages, std::size_t max_points) {
  if (!is_commutative(q.values())) throw HypothesisError("convexify requires a commutative value set");
  ConvexifyResult out{q, {}, 0, false, {}, Report("convexify")};
  for (std::size_t x = 0; x < q.size(); ++x) out.inclusion.push_back(x);
  const bool started_full = full_convex_report(q, 0).full;
  bool stayed_full = true;

  while (true) {
    const auto rep = full_convex_report(out.space, 0);
    stayed_full = stayed_full && (!started_full || rep.full);
    if (rep.convex) {
      out.convex = true;
      break;
    }
    if (out.stages >= max_stages) {
      out.stop_reason = "stage budget of " + std::to_string(max_stages) + " reached";
      break;
    }
    const auto next = convexify_stage_size(out.space);
    if (next > max_points) {
      out.stop_reason = "next stage would have " + std::to_string(next) + " points (ceiling " +
                        std::to_string(max_points) + ")";
      break;
    }
    auto stage = convexify_stage(out.space);
    out.report.merge(stage.report);
    out.space = std::move(stage.space);
    ++out.stages;
  }
  auto& r = out.report;
  r.check(kConvex, "distances between original points are unchanged",
          restriction_matches(out.space, out.inclusion, q));
  if (started_full) r.check(kFullConvex, "fullness is preserved by every stage", stayed_full);
  r.info(kConvex, "stages run", std::to_string(out.stages) + " (" + std::to_string(out.space.size()) + " points)");
  if (out.convex)
    r.check(kConvex, "result satisfies condition (C)", true);
  else
    r.partial(kConvex, "convexity not reached within budget", out.stop_reason);
  return out;
}

EntourageMvs entourage_mvs(const QmSpace& q) {
  const auto& m = q.values();
  if (!is_atom_free(m)) throw HypothesisError("entourage_mvs requires an atom-free value set");
  const auto fc = full_convex_report(q, 1);
  if (!fc.full) throw HypothesisError("entourage_mvs requires a full space: value " + m.label(fc.missing.front()) + " is never attained");
  if (!fc.convex) {
    const auto& w = fc.unrealized.front();
    throw HypothesisError("entourage_mvs requires a convex space: d(" + q.points()[w.x] + "," +
                          q.points()[w.y] + ") = " + m.label(w.first) + "+" + m.label(w.second) +
                          " has no midpoint");
  }

  const auto n = q.size();
  Report r("entourage-mvs");
  Entourage u0(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (q.d(x, y) == m.neutral()) u0.set(x, y);

  auto qb = base_from_qm(q);
  r.merge(qb.report);
  const auto& star = qb.base.members();
  std::vector<std::string> names{"U" + m.label(m.neutral())};
  std::vector<std::string> star_names(star.size());
  for (auto a : m.nonzero())
    if (star_names[qb.member_of[a]].empty()) star_names[qb.member_of[a]] = "U" + m.label(a);
  names.insert(names.end(), star_names.begin(), star_names.end());

  // U_{x,y} = U_{f(x,y)}.
  bool pair_sets = true;
  for (std::size_t x = 0; x < n && pair_sets; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (u0.test(x, y)) continue;
      Entourage meet = Entourage::full(n);
      for (const auto& u : star)
        if (u.test(x, y)) meet = meet & u;
      if (!(meet == star[qb.member_of[q.d(x, y)]])) {
        pair_sets = false;
        break;
      }
    }
  r.check(kEntourageMvs, "U_{x,y} = U_{f(x,y)} for (x,y) not in U0", pair_sets);

  auto built = build_value_family(u0, star, names, r, kEntourageMvs);
  if (!built) throw TheoremFailure("entourage value set: " + built.violation().describe());
  auto vf = std::move(built).value();

  EntourageMvs out;
  out.family = vf.family;
  out.names = vf.table.labels();
  out.table = share(vf.table);
  out.hom.assign(m.size(), 0);
  for (auto a : m.nonzero()) out.hom[a] = 1 + qb.member_of[a];
  const auto& v = *out.table;

  bool sum_rule = true;
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b)
      sum_rule = sum_rule && v.add(out.hom[a], out.hom[b]) == out.hom[m.add(a, b)];
  r.check(kEntourageMvs, "U_m + U_m' = U_{m+m'}", sum_rule);

  bool order = true;
  for (Element a = 0; a < m.size(); ++a)
    for (Element b = 0; b < m.size(); ++b)
      order = order && out.family[out.hom[a]].is_subset_of(out.family[out.hom[b]]) == m.leq(a, b);
  r.check(kEntourageMvs, "U_m ⊆ U_m' iff m ⊴ m'", order);

  const auto h = validate_hom(out.hom, q.mvs(), out.table);
  r.check(kEntourageMvs, "h: m ↦ U_m is a homomorphism", h.ok(), h.ok() ? "" : h.violation().describe());
  r.check(kEntourageMvs, "h is surjective", h.ok() && h.value().surjective());
  const bool injective = out.family.size() == m.size();
  r.info(kEntourageMvs, "injectivity of h is not asserted", injective ? "h is injective here" : "h is not injective here");
  r.check(kEntourageMvs, "(Q4) (V,+) is atom-free", is_atom_free(v));
  if (is_strictly_atom_free(m))
    r.check(kEntourageMvs, "strictly atom-free M gives strictly atom-free (V,+)", is_strictly_atom_free(v));
  out.report = std::move(r);
  return out;
}

MetrizedBase metrize_from_base(std::vector<std::string> points, const Entourage& u0,
                               const std::vector<Entourage>& base, std::vector<std::string> names) {
  const auto n = points.size();
  if (u0.size() != n) throw InputError("U0 lives on the wrong carrier");
  if (base.empty()) throw HypothesisError("the base V* is empty");
  if (names.empty()) {
    names.push_back("U0");
    for (std::size_t i = 0; i < base.size(); ++i) names.push_back("U" + std::to_string(i + 1));
  }
  if (names.size() != base.size() + 1) throw InputError("one name per base member plus U0 expected");

  Report r("metrize-from-base");
  auto ub = validate_base(base);
  if (!ub) throw HypothesisError("V* is not a quasiuniform base: " + ub.violation().describe());
  r.check(kMetrize, "V* satisfies (UB1)-(UB3)", true);

  auto built = build_value_family(u0, base, names, r, kMetrize);
  if (!built) throw HypothesisError(built.violation().describe());
  auto vf = std::move(built).value();
  const auto table = share(vf.table);

  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[x][y] = vf.pair_index[x * n + y];
  MetrizedBase out{build(std::move(points), table, d, kMetrize), vf.family, Report()};
  r.check(kMetrize, "f(x,y) = U_{x,y} is a quasimetric into (V,+)", true);

  bool rows = true;
  for (std::size_t i = 1; i < vf.family.size(); ++i)
    for (std::size_t x = 0; x < n; ++x)
      rows = rows && vf.family[i].row(x) == ball(out.space, x, i, BallKind::Closed);
  r.check(kMetrize, "U[x] equals the closed ball of radius U at x", rows);

  const auto tf = induced_topology(out.space);
  const auto tu = base_topology(ub.value());
  r.check(kMetrize, "T_f equals the topology of the quasiuniformity", tf == tu);
  r.info(kMetrize, "(Q4) is not required", is_atom_free(*table) ? "(V,+) is atom-free" : "(V,+) is not atom-free");
  out.report = std::move(r);
  return out;
}

RoundtripResult roundtrip(const QmSpace& q, std::size_t max_stages, std::size_t max_points) {
  if (!is_atom_free(q.values())) throw HypothesisError("roundtrip requires an atom-free value set");
  RoundtripResult out;
  out.report = Report("roundtrip");
  auto& r = out.report;
  const auto original = induced_topology(q);

  QmSpace full = q;
  std::vector<std::size_t> inclusion(q.size());
  for (std::size_t x = 0; x < q.size(); ++x) inclusion[x] = x;
  if (full_convex_report(q, 0).full) {
    r.info(kFull, "input is already full; identity embedding used");
  } else {
    auto e = embed_full(q);
    r.merge(e.report);
    full = std::move(e.space);
    inclusion = e.inclusion;
  }

  auto cv = convexify_until(full, max_stages, max_points);
  r.merge(cv.report);
  if (!cv.convex) {
    r.partial(kRoundtrip, "pipeline stopped before (V,+) could be built", cv.stop_reason);
    out.inclusion = inclusion;
    out.final_space = std::move(cv.space);
    return out;
  }
  for (auto& p : inclusion) p = cv.inclusion[p];

  auto em = entourage_mvs(cv.space);
  r.merge(em.report);
  auto mb = metrize_from_base(cv.space.points(), em.u0(), em.star(), em.names);
  r.merge(mb.report);

  const auto final_topology = induced_topology(mb.space);
  r.check(kRoundtrip, "final topology equals the topology of the full convex space",
          final_topology == induced_topology(cv.space));
  r.check(kRoundtrip, "original topology is the relative topology of its image",
          embeds_topologically(original, final_topology, inclusion));
  out.complete = true;
  out.inclusion = std::move(inclusion);
  out.final_space = std::move(mb.space);
  return out;
}

}  // namespace mvstop
