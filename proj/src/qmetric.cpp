#include "mvstop/qmetric.hpp"

#include <algorithm>
#include <limits>

#include "value_index.hpp"

namespace mvstop {

namespace {

const char* kPullback = "pullback along a map";
const char* kRelative = "relative topology";
const char* kGlue = "gluing over a point-finite open refinement";
const char* kProduct = "finite products";
const char* kAlexandrov = "Alexandrov metrization";
const char* kClosedBalls = "closed balls";

std::string describe_topology(const FiniteTopology& t, const std::vector<std::string>& labels) {
  std::string out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (x) out += " ";
    out += "U(" + labels.at(x) + ")=" + format_subset(t.minimal_neighbourhood(x), labels);
  }
  return out;
}

QmSpace build(std::vector<std::string> labels, const MvsRef& m,
              const std::vector<std::vector<Element>>& d, const char* anchor) {
  auto checked = validate_qm(std::move(labels), m, d);
  if (!checked)
    throw TheoremFailure(std::string(anchor) + ": constructed function is not a quasimetric: " +
                         checked.violation().describe());
  return std::move(checked).value();
}

std::vector<std::size_t> local_index(const Subset& members) {
  std::vector<std::size_t> out(members.size(), std::numeric_limits<std::size_t>::max());
  std::size_t j = 0;
  for (auto x = members.find_first(); x != Subset::npos; x = members.find_next(x)) out[x] = j++;
  return out;
}

}  // namespace

QmSpace::QmSpace(std::vector<std::string> points, MvsRef mvs, std::vector<std::uint16_t> d)
    : points_(std::move(points)), mvs_(std::move(mvs)), d_(std::move(d)) {
  const auto n = size();
  symmetric_ = strict_ = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (d_[x * n + y] != d_[y * n + x]) symmetric_ = false;
      if (x != y && d_[x * n + y] == mvs_->neutral()) strict_ = false;
    }
}

std::vector<std::vector<Element>> QmSpace::rows() const {
  std::vector<std::vector<Element>> out(size(), std::vector<Element>(size()));
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y) out[x][y] = d(x, y);
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

Checked<QmSpace> validate_qm(std::vector<std::string> points, MvsRef mvs,
                             const std::vector<std::vector<Element>>& d) {
  if (!mvs) throw InputError("quasimetric needs a value set");
  const auto n = points.size();
  const auto k = mvs->size();
  if (k > std::numeric_limits<std::uint16_t>::max()) throw InputError("value set too large");
  if (d.size() != n) throw InputError("distance matrix must have one row per point");
  std::vector<std::uint16_t> flat;
  flat.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    if (d[x].size() != n) throw InputError("distance row " + std::to_string(x) + " has wrong length");
    for (std::size_t y = 0; y < n; ++y) {
      if (d[x][y] >= k) throw InputError("distance value out of range");
      flat.push_back(static_cast<std::uint16_t>(d[x][y]));
    }
  }
  const MvsTable& m = *mvs;

  for (std::size_t x = 0; x < n; ++x)
    if (flat[x * n + x] != m.neutral()) return Violation{"f2", {x}, "d(x,x) != e"};

  // (f1) grouped by values: for every (a, b) reachable as d(x,y) = a,
  // d(y,z) = b, every such z needs d(x,z) ⊴ a + b.
  const detail::ValueIndex index(flat, n, k);
  for (std::size_t x = 0; x < n; ++x) {
    const auto reach = index.two_step(flat, x);
    for (Element a = 0; a < k; ++a)
      for (Element b = 0; b < k; ++b) {
        const auto& zs = reach[a * k + b];
        if (zs.none()) continue;
        const Element s = m.add(a, b);
        Subset bad(n);
        for (Element c = 0; c < k; ++c)
          if (!m.leq(c, s)) bad |= index.row(x, c);
        bad &= zs;
        if (bad.none()) continue;
        const auto z = bad.find_first();
        for (std::size_t y = 0; y < n; ++y)
          if (flat[x * n + y] == a && flat[y * n + z] == b)
            return Violation{"f1", {x, y, z}, "d(x,z) is not ⊴ d(x,y) + d(y,z)"};
      }
  }
  return QmSpace(std::move(points), std::move(mvs), std::move(flat));
}

Subset ball(const QmSpace& q, std::size_t x, Element m, BallKind kind) {
  const auto& v = q.values();
  Subset out(q.size());
  for (std::size_t y = 0; y < q.size(); ++y) {
    const Element dxy = q.d(x, y);
    if (kind == BallKind::Open ? v.lt(dxy, m) : v.leq(dxy, m)) out.set(y);
  }
  return out;
}

NbhdSystem ball_system(const QmSpace& q, BallKind kind) {
  NbhdSystem b;
  const auto star = q.values().nonzero();
  for (std::size_t x = 0; x < q.size(); ++x) {
    Family bx;
    for (auto m : star) bx.push_back(ball(q, x, m, kind));
    b.at.push_back(std::move(bx));
  }
  return b;
}

FiniteTopology induced_topology(const QmSpace& q) {
  const auto b = ball_system(q, BallKind::Open);
  const auto ax = validate_nbhd_system(b);
  if (!ax.open_system())
    throw InternalError("open balls fail to form an open neighbourhood system: " +
                        ax.failures.front().describe());
  return topology_of(b);
}

bool closed_ball_equivalence(const QmSpace& q, Report* report) {
  if (!is_atom_free(q.values()))
    throw HypothesisError("closed-ball equivalence requires an atom-free value set");
  const auto open = ball_system(q, BallKind::Open);
  const auto closed = ball_system(q, BallKind::Closed);
  const auto ax = validate_nbhd_system(closed);
  const bool nbhd = ax.neighbourhood_system();
  const bool equivalent = nbhd && systems_equivalent(open, closed);
  if (report) {
    report->check(kClosedBalls, "closed balls satisfy (B1), (B2), (B3)", nbhd,
                  nbhd ? "" : ax.failures.front().describe());
    report->check(kClosedBalls, "closed-ball system is equivalent to the open-ball system", equivalent);
  }
  return nbhd && equivalent;
}

QmSpace canonical_metric_function(const MvsRef& m) {
  if (!is_commutative(*m)) throw HypothesisError("canonical metric function needs a commutative MVS");
  const auto k = m->size();
  std::vector<std::vector<Element>> d(k, std::vector<Element>(k));
  for (Element a = 0; a < k; ++a)
    for (Element b = 0; b < k; ++b) d[a][b] = a == b ? m->neutral() : m->add(a, b);
  return build(m->labels(), m, d, "canonical metric function");
}

Construction pullback(const QmSpace& q, const std::vector<std::size_t>& g,
                      std::vector<std::string> labels) {
  for (auto y : g)
    if (y >= q.size()) throw InputError("pullback map leaves the target carrier");
  if (labels.empty()) labels = default_labels(g.size());
  if (labels.size() != g.size()) throw InputError("pullback labels do not match the domain size");
  const auto n = g.size();
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[x][y] = q.d(g[x], g[y]);

  Construction out{build(labels, q.mvs(), d, kPullback), Report("pullback")};
  auto& r = out.report;
  r.check(kPullback, "f2(x1,x2) = f1(g(x1),g(x2)) is a quasimetric", true);

  bool balls = true;
  for (std::size_t x = 0; x < n && balls; ++x)
    for (auto m : q.values().nonzero()) {
      const auto target = ball(q, g[x], m, BallKind::Open);
      Subset pre(n);
      for (std::size_t p = 0; p < n; ++p)
        if (target.test(g[p])) pre.set(p);
      if (ball(out.space, x, m, BallKind::Open) != pre) {
        balls = false;
        break;
      }
    }
  r.check(kPullback, "B_f2(x,m) = g^-1 B_f1(g(x),m)", balls);

  const auto tf = induced_topology(out.space);
  const auto tg = induced_by_maps(n, {InducingMap{induced_topology(q), g}});
  r.check(kPullback, "topology of f2 equals the topology induced by g", tf == tg,
          describe_topology(tf, out.space.points()));
  return out;
}

Construction restrict(const QmSpace& q, const Subset& a) {
  if (a.size() != q.size()) throw InputError("restrict: subset over the wrong carrier");
  if (a.none()) throw InputError("restrict: subset must be non-empty");
  const auto idx = members(a);
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> d(idx.size(), std::vector<Element>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) {
    labels.push_back(q.points()[idx[i]]);
    for (std::size_t j = 0; j < idx.size(); ++j) d[i][j] = q.d(idx[i], idx[j]);
  }
  Construction out{build(labels, q.mvs(), d, kRelative), Report("restrict")};
  const auto tf = induced_topology(out.space);
  out.report.check(kRelative, "topology of f|AxA equals the relative topology on A",
                   tf == relative_topology(induced_topology(q), a),
                   describe_topology(tf, out.space.points()));
  return out;
}

GlueResult glue(const FiniteTopology& t, const std::vector<GluePiece>& pieces,
                std::vector<std::string> labels) {
  const auto n = t.size();
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw InputError("glue: labels do not match the carrier");
  if (pieces.empty()) throw InputError("glue: need at least one piece");
  const MvsRef& base = pieces.front().space.mvs();
  if (!is_atom_free(*base)) throw HypothesisError("glue requires an atom-free value set");

  Family cover;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (p.members.size() != n) throw InputError("glue: piece over the wrong carrier");
    if (p.space.size() != p.members.count())
      throw InputError("glue: piece " + std::to_string(i) + " has the wrong number of points");
    if (!(*p.space.mvs() == *base)) throw InputError("glue: pieces use different value sets");
    cover.push_back(p.members);
  }
  auto refinement = point_finite_refinement(t, cover);  // checks open + covering
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (!(induced_topology(pieces[i].space) == relative_topology(t, pieces[i].members)))
      throw InputError("glue: piece " + std::to_string(i) +
                       " does not induce the relative topology of its cover member");

  const auto infinity_mvs = share(adjoin_infinity(*base));
  const Element inf = base->size();
  const Element e = base->neutral();

  // Local distance on refinement member j, through its assigned piece.
  std::vector<std::vector<std::size_t>> local;
  for (auto i : refinement.assignment) local.push_back(local_index(pieces[i].members));
  auto local_d = [&](std::size_t j, std::size_t x, std::size_t y) {
    const auto& piece = pieces[refinement.assignment[j]];
    return piece.space.d(local[j][x], local[j][y]);
  };

  const auto& v = refinement.refinement;
  std::vector<std::vector<std::size_t>> containing(n);  // J_x ascending
  std::vector<Subset> cores(n, full_set(n));
  for (std::size_t j = 0; j < v.size(); ++j)
    for (auto x = v[j].find_first(); x != Subset::npos; x = v[j].find_next(x)) {
      containing[x].push_back(j);
      cores[x] &= v[j];
    }

  auto glued = [&](bool reversed) {
    std::vector<std::vector<Element>> d(n, std::vector<Element>(n, inf));
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!cores[x].test(y)) continue;
        auto js = containing[x];
        if (reversed) std::reverse(js.begin(), js.end());
        Element sum = e;
        for (auto j : js) sum = base->add(sum, local_d(j, x, y));
        d[x][y] = sum;
      }
    return d;
  };
  const auto d = glued(false);
  const bool order_free = glued(true) == d;

  GlueResult out{build(labels, infinity_mvs, d, kGlue), std::move(refinement), cores, Report("glue")};
  auto& r = out.report;
  std::string witnesses;
  for (std::size_t j = 0; j < out.refinement.refinement.size(); ++j) {
    if (j) witnesses += " ";
    witnesses += format_subset(out.refinement.refinement[j], labels) + "<=piece" +
                 std::to_string(out.refinement.assignment[j]);
  }
  r.info(kGlue, "point-finite open refinement and containment witnesses", witnesses);

  bool cores_open = true;
  bool cores_nested = true;
  for (std::size_t x = 0; x < n; ++x) {
    cores_open = cores_open && t.is_open(cores[x]);
    for (auto y = cores[x].find_first(); y != Subset::npos; y = cores[x].find_next(y))
      cores_nested = cores_nested && cores[y].is_subset_of(cores[x]);
  }
  r.check(kGlue, "every W_x is open", cores_open);
  r.check(kGlue, "y in W_x implies W_y inside W_x", cores_nested);
  r.check(kGlue, "glued function is a quasimetric into M with infinity adjoined", true);
  r.check(kGlue, "sum over J_x does not depend on summation order", order_free);

  const auto tf = induced_topology(out.space);
  r.check(kGlue, "T_f = T", tf == t, describe_topology(tf, labels));
  const bool pieces_strict =
      std::all_of(pieces.begin(), pieces.end(), [](const GluePiece& p) { return p.space.strict(); });
  if (pieces_strict)
    r.check(kGlue, "strict pieces give a strict glued function", out.space.strict());
  else
    r.info(kGlue, "some piece is not strict; strictness of the result is not implied");
  r.info(kGlue, "symmetry is not asserted", out.space.symmetric() ? "result happens to be symmetric"
                                                                  : "result is not symmetric");
  return out;
}

Construction product(const std::vector<QmSpace>& factors) {
  if (factors.empty()) throw InputError("product needs at least one factor");
  const MvsRef& m = factors.front().mvs();
  for (const auto& f : factors)
    if (!(*f.mvs() == *m)) throw InputError("product factors use different value sets");
  if (!is_atom_free(*m)) throw HypothesisError("product requires an atom-free value set");

  // Mixed-radix coordinates, first factor most significant.
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.size();
  std::vector<std::vector<std::size_t>> coords(n, std::vector<std::size_t>(factors.size()));
  std::vector<std::string> labels(n);
  for (std::size_t p = 0; p < n; ++p) {
    std::size_t rest = p;
    for (std::size_t i = factors.size(); i-- > 0;) {
      coords[p][i] = rest % factors[i].size();
      rest /= factors[i].size();
    }
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i)
      label += (i ? "," : "") + factors[i].points()[coords[p][i]];
    labels[p] = label + ")";
  }

  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      Element sum = m->neutral();
      for (std::size_t i = 0; i < factors.size(); ++i)
        sum = m->add(sum, factors[i].d(coords[x][i], coords[y][i]));
      d[x][y] = sum;
    }

  Construction out{build(labels, m, d, kProduct), Report("product")};
  auto& r = out.report;
  r.check(kProduct, "f(x,y) = sum of f_i(x_i,y_i) is a quasimetric", true);

  bool projections = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t i = 0; i < factors.size(); ++i)
        projections = projections &&
                      m->leq(factors[i].d(coords[x][i], coords[y][i]), out.space.d(x, y));
  r.check(kProduct, "f_i(x_i,y_i) ⊴ f(x,y) for every coordinate", projections);

  // Box system: products of open balls, one radius per factor.
  const auto star = m->nonzero();
  std::vector<std::vector<Subset>> factor_balls;  // [i][x_i * |M*| + r]
  for (const auto& f : factors) {
    std::vector<Subset> balls;
    for (std::size_t x = 0; x < f.size(); ++x)
      for (auto mm : star) balls.push_back(ball(f, x, mm, BallKind::Open));
    factor_balls.push_back(std::move(balls));
  }
  std::size_t radii = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) radii *= star.size();
  NbhdSystem boxes;
  for (std::size_t x = 0; x < n; ++x) {
    Family bx;
    for (std::size_t code = 0; code < radii; ++code) {
      std::vector<std::size_t> radius(factors.size());
      std::size_t rest = code;
      for (std::size_t i = factors.size(); i-- > 0;) {
        radius[i] = rest % star.size();
        rest /= star.size();
      }
      Subset box(n);
      for (std::size_t y = 0; y < n; ++y) {
        bool in = true;
        for (std::size_t i = 0; i < factors.size() && in; ++i)
          in = factor_balls[i][coords[x][i] * star.size() + radius[i]].test(coords[y][i]);
        if (in) box.set(y);
      }
      bx.push_back(std::move(box));
    }
    boxes.at.push_back(std::move(bx));
  }
  r.check(kProduct, "box neighbourhoods and open balls of f are equivalent systems",
          systems_equivalent(boxes, ball_system(out.space, BallKind::Open)));

  FiniteTopology expected = induced_topology(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i)
    expected = product_topology(expected, induced_topology(factors[i]));
  const auto tf = induced_topology(out.space);
  r.check(kProduct, "T_f equals the product topology", tf == expected,
          "open sets: " + std::to_string(tf.count_opens()));
  return out;
}

Construction alexandrov_metrize(const FiniteTopology& t, std::vector<std::string> labels) {
  const auto n = t.size();
  if (labels.empty()) labels = default_labels(n);
  if (labels.size() != n) throw InputError("alexandrov: labels do not match the carrier");
  const auto m = share(max_mvs(3));
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      d[x][y] = x == y ? 0 : (t.minimal_neighbourhood(x).test(y) ? 1 : 2);

  Construction out{build(labels, m, d, kAlexandrov), Report("alexandrov")};
  auto& r = out.report;
  r.check(kAlexandrov, "f is a strict quasimetric", out.space.strict());
  bool balls = true;
  for (std::size_t x = 0; x < n; ++x)
    balls = balls && ball(out.space, x, 1, BallKind::Open) == t.minimal_neighbourhood(x);
  r.check(kAlexandrov, "U(x) = B_f(x,1) for every x", balls);
  const auto tf = induced_topology(out.space);
  r.check(kAlexandrov, "T_f = T", tf == t, describe_topology(tf, labels));
  return out;
}

QmSpace cofinite_family_space(std::size_t n, const Subset& a) {
  if (a.size() != n) throw InputError("cofinite_family_space: subset over the wrong carrier");
  if (n == 0 || !a.test(0)) throw InputError("cofinite_family_space: the set must contain point 0");
  std::vector<std::vector<Element>> d(n, std::vector<Element>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) d[x][y] = (x == y || (a.test(x) && a.test(y))) ? 0 : 2;
  return build(default_labels(n), share(max_mvs(3)), d, "cofinite family");
}

}  // namespace mvstop
