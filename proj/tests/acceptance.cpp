// One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "mvstop/character.hpp"
#include "mvstop/corpus.hpp"
#include "mvstop/quniform.hpp"
#include "oracles.hpp"

using namespace mvstop;

namespace {

// Collects the first failed expectation of a criterion.
class Check {
 public:
  void operator()(bool ok, const std::string& what) {
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

bool has_clause(const Report& r, const std::string& needle) {
  for (const auto& c : r.clauses())
    if (c.status == Status::Pass && c.statement.find(needle) != std::string::npos) return true;
  return false;
}

void axiom_suite(Check& check) {
  const auto mx = validate_mvs(default_labels(3), 0, max_mvs(3).rows());
  check(mx.ok(), "max table rejected");
  const auto c = validate_mvs(default_labels(3), 0, collapse_mvs().rows());
  check(c.ok(), "collapse table rejected");
  const auto bad = validate_mvs(default_labels(2), 0, {{0, 1}, {1, 0}});
  check(!bad.ok() && bad.violation().axiom == "M3", "1+1=0 not rejected under (M3)");
  if (mx.ok()) {
    check(is_atom_free(mx.value()), "max should be atom-free");
    check(!is_strictly_atom_free(mx.value()), "max should not be strictly atom-free");
  }
  if (c.ok()) {
    check(is_commutative(c.value()), "collapse should be commutative");
    check(!is_atom_free(c.value()), "collapse should not be atom-free");
  }
}

void collapse_discrete(Check& check) {
  const auto f = canonical_metric_function(fixtures::collapse());
  check(induced_topology(f) == FiniteTopology::discrete(f.size()), "T_f is not discrete");
}

void alexandrov_exhaustive(Check& check) {
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ts = enumerate_topologies(n);
    check(ts.size() == count_closed_families(n), "enumeration paths disagree at n = " + std::to_string(n));
    check(ts.size() == oracle::all_topologies(n).size(), "oracle count differs at n = " + std::to_string(n));
    if (n == 0) continue;
    for (const auto& t : ts) {
      const auto c = alexandrov_metrize(t);
      check(c.report.all_pass(), "alexandrov report has a FAIL");
      check(induced_topology(c.space) == t, "T_f differs from T");
      check(c.space.strict(), "f is not strict");
      for (std::size_t x = 0; x < n; ++x)
        check(ball(c.space, x, 1, BallKind::Open) == t.minimal_neighbourhood(x), "U(x) differs from B_f(x,1)");
    }
  }
}

void glue_example(Check& check) {
  const auto t = generate_topology(3, {subset_of(3, {0, 1}), subset_of(3, {1, 2})});
  const std::vector<std::string> labels{"1", "2", "3"};
  std::vector<GluePiece> pieces;
  for (const auto& member : {subset_of(3, {0, 1}), subset_of(3, {1, 2})}) {
    std::vector<std::string> sub;
    for (auto x = member.find_first(); x != Subset::npos; x = member.find_next(x)) sub.push_back(labels[x]);
    pieces.push_back({member, alexandrov_metrize(relative_topology(t, member), sub).space});
  }
  const auto g = glue(t, pieces, labels);
  const auto& m = g.space.values();
  check(m.label(g.space.d(0, 1)) == "1", "f(1,2) != 1");
  check(m.label(g.space.d(1, 0)) == "inf", "f(2,1) != inf");
  check(induced_topology(g.space) == t, "T_f != T");
  check(g.space.strict(), "glued function not strict");
  check(g.report.all_pass(), "glue report has a FAIL");
}

void product_check(Check& check) {
  SpaceGenerator gen(2024, fixtures::max3(), 4);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.next();
    const auto b = gen.next();
    const auto p = product({a, b});
    const auto ta = induced_topology(a);
    const auto tb = induced_topology(b);
    check(p.report.all_pass(), "product report has a FAIL at pair " + std::to_string(i));
    check(induced_topology(p.space) == product_topology(ta, tb), "T_f != product topology at pair " + std::to_string(i));
    check(oracle::to_opens(induced_topology(p.space)) ==
              oracle::product_opens(a.size(), oracle::to_opens(ta), b.size(), oracle::to_opens(tb)),
          "oracle product differs at pair " + std::to_string(i));
  }
}

void closed_balls(Check& check) {
  SpaceGenerator gen(2024, fixtures::max3(), 4);
  for (int i = 0; i < 400; ++i) {
    const auto q = gen.next();
    const auto open = ball_system(q, BallKind::Open);
    const auto closed = ball_system(q, BallKind::Closed);
    check(systems_equivalent(open, closed), "open and closed systems differ at space " + std::to_string(i));
    check(validate_nbhd_system(closed).neighbourhood_system(), "closed system fails B1-B3 at " + std::to_string(i));
    check(closed_ball_equivalence(q), "closed_ball_equivalence false at " + std::to_string(i));
  }
}

QmSpace symmetrize(const QmSpace& q) {
  auto d = q.rows();
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) d[x][y] = q.values().add(q.d(x, y), q.d(y, x));
  return validate_qm(q.points(), q.mvs(), d).value();
}

void quasiuniform_suite(Check& check) {
  SpaceGenerator gen(2024, fixtures::max3(), 4);
  for (int i = 0; i < 400; ++i) {
    const auto raw = gen.next();
    for (const auto& q : {raw, symmetrize(raw)}) {
      const auto tag = " at space " + std::to_string(i);
      const auto qb = base_from_qm(q);
      check(qb.report.all_pass(), "base_from_qm report has a FAIL" + tag);
      check(check_base_axioms(qb.base.members()).ok(), "UB1-UB3 fail" + tag);
      check(base_topology(qb.base) == induced_topology(q), "base topology differs" + tag);
      if (q.symmetric()) {
        for (const auto& u : qb.base.members()) check(u == u.inverse(), "U_m != U_m^-1" + tag);
        check(check_uniformity(qb.base), "symmetric base is no uniformity" + tag);
      }
      auto widened = qb.base.members();
      widened.push_back(Entourage::full(q.size()));
      const auto other = validate_base(widened);
      check(other.ok(), "widened base invalid" + tag);
      if (other.ok()) {
        check(mutually_cofinal(qb.base, other.value()), "widened base not cofinal" + tag);
        check(bases_same_topology(qb.base, other.value()), "cofinal bases give different topologies" + tag);
      }
    }
  }
}

void characterization(Check& check) {
  const auto q = fixtures::clique9();
  const auto fc = full_convex_report(q);
  check(fc.full && fc.convex, "clique space not full and convex");
  const auto em = entourage_mvs(q);
  check(em.family.size() == 3, "|V| != 3");
  check(em.report.all_pass(), "entourage report has a FAIL");
  for (const char* tag : {"(Q1)", "(Q2)", "(Q3)", "(Q4)", "h is surjective"})
    check(has_clause(em.report, tag), std::string(tag) + " not PASS");
  std::vector<Element> h(em.hom.begin(), em.hom.end());
  const auto iso = validate_hom(h, fixtures::max3(), em.table);
  check(iso.ok() && iso.value().surjective() && em.table->size() == 3, "V is not isomorphic to max");

  const auto mb = metrize_from_base(q.points(), em.u0(), em.star());
  check(mb.report.all_pass(), "metrize report has a FAIL");
  std::vector<Subset> cliques;
  for (std::size_t x = 0; x < 9; ++x) {
    Subset s(9);
    for (std::size_t y = 3 * (x / 3); y < 3 * (x / 3) + 3; ++y) s.set(y);
    cliques.push_back(s);
  }
  check(induced_topology(mb.space) == FiniteTopology::from_minimal(cliques), "partition topology not reproduced");

  const auto u = entourage_mvs(fixtures::uniform3());
  std::vector<Element> hu(u.hom.begin(), u.hom.end());
  const auto iso2 = validate_hom(hu, fixtures::max2(), u.table);
  check(u.table->size() == 2 && iso2.ok() && iso2.value().surjective(), "uniform space: V is not ({0,1},max)");
}

void embedding_suite(Check& check) {
  SpaceGenerator gen(2024, fixtures::max3(), 5);
  for (int i = 0; i < 100; ++i) {
    const auto q = gen.next();
    const auto tag = " at space " + std::to_string(i);
    const auto e = embed_full(q);
    check(e.report.all_pass(), "embed report has a FAIL" + tag);
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = 0; y < q.size(); ++y)
        check(e.space.d(e.inclusion[x], e.inclusion[y]) == q.d(x, y), "inclusion is no isometry" + tag);
    const auto& m = e.space.values();
    for (Element a = 0; a < m.size(); ++a) {
      bool attained = false;
      for (std::size_t x = 0; x < e.space.size() && !attained; ++x)
        for (std::size_t y = 0; y < e.space.size() && !attained; ++y) attained = e.space.d(x, y) == a;
      check(attained, "value " + m.label(a) + " not attained" + tag);
    }
  }

  SpaceGenerator small(77, fixtures::max3(), 3);
  for (int i = 0; i < 40; ++i) {
    const auto q = small.next();
    const auto s = convexify_stage(q);
    check(s.report.all_pass(), "stage report has a FAIL");
    const auto& m = q.values();
    for (std::size_t x = 0; x < q.size(); ++x)
      for (std::size_t y = 0; y < q.size(); ++y)
        for (Element a = 0; a < m.size(); ++a)
          for (Element b = 0; b < m.size(); ++b) {
            if (m.add(a, b) != q.d(x, y) || (x == y && a == 0 && b == 0)) continue;
            bool found = false;
            for (std::size_t z = q.size(); z < s.space.size() && !found; ++z)
              found = s.space.d(x, z) == a && s.space.d(z, y) == b;
            check(found, "decomposition without a new midpoint");
          }
  }

  const auto ab = fixtures::space(fixtures::max3(), {{0, 2}, {2, 0}}, {"a", "b"});
  const auto s = convexify_stage(ab);
  const auto& pts = s.space.points();
  const auto it = std::find(pts.begin(), pts.end(), "(a,1,2,b)");
  check(it != pts.end(), "(a,1,2,b) missing");
  if (it != pts.end()) {
    const auto p = static_cast<std::size_t>(it - pts.begin());
    check(s.space.d(0, p) == 1 && s.space.d(p, 1) == 2, "(a,1,2,b) has the wrong distances");
  }
}

void enumeration(Check& check) {
  check(enumerate_mvs(2, false).size() == 1, "enumerate_mvs(2) != 1");
  for (std::size_t k : {2u, 3u}) {
    const auto found = enumerate_mvs(k, false);
    check(found.size() == enumerate_mvs_exhaustive(k).size(), "MVS enumeration paths disagree");
    check(found.size() == oracle::count_mvs(k), "MVS oracle count differs");
    for (const auto& e : found)
      check(validate_mvs(e.table.labels(), e.table.neutral(), e.table.rows()).ok(), "enumerated MVS fails");
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto ts = enumerate_topologies(n);
    check(ts.size() == count_closed_families(n), "topology enumeration paths disagree");
    for (const auto& t : ts) {
      const auto back = topology_from_opens(n, t.opens());
      check(back.ok() && back.value() == t, "enumerated topology fails re-validation");
    }
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"axiom suite", axiom_suite},
      {"f_M on the collapse table is discrete", collapse_discrete},
      {"Alexandrov metrization on all topologies up to 4 points", alexandrov_exhaustive},
      {"gluing example over M with infinity", glue_example},
      {"sum quasimetric induces the product topology", product_check},
      {"closed-ball equivalence", closed_balls},
      {"quasiuniformity suite", quasiuniform_suite},
      {"characterization roundtrip", characterization},
      {"embedding suite", embedding_suite},
      {"enumeration sanity", enumeration},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check check;
    try {
      criteria[i].second(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    std::cout << (check.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
    if (!check.ok()) std::cout << " (" << check.failure() << ")";
    std::cout << '\n';
    failures += !check.ok();
  }
  return failures == 0 ? 0 : 1;
}
