#include <doctest.h>

#include "fixtures.hpp"
#include "mvstop/corpus.hpp"
#include "mvstop/qmetric.hpp"
#include "oracles.hpp"

using namespace mvstop;

TEST_CASE("(f2) and (f1) violations carry witnesses") {
  const auto m = fixtures::max3();
  const auto f2 = validate_qm(default_labels(2), m, {{0, 1}, {1, 1}});
  REQUIRE_FALSE(f2.ok());
  CHECK(f2.violation().axiom == "f2");
  CHECK(f2.violation().witness == std::vector<std::size_t>{1});

  const auto f1 = validate_qm(default_labels(3), m, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  REQUIRE_FALSE(f1.ok());
  CHECK(f1.violation().axiom == "f1");
  const auto& w = f1.violation().witness;
  REQUIRE(w.size() == 3);
  const std::vector<std::vector<std::size_t>> d{{0, 1, 2}, {1, 0, 1}, {2, 1, 0}};
  CHECK_FALSE(m->leq(d[w[0]][w[2]], m->add(d[w[0]][w[1]], d[w[1]][w[2]])));

  CHECK_THROWS_AS(validate_qm(default_labels(2), m, {{0, 3}, {1, 0}}), InputError);
  CHECK_THROWS_AS(validate_qm(default_labels(2), m, {{0, 1}}), InputError);
}

TEST_CASE("validation agrees with the triple-loop oracle on random tables") {
  std::mt19937_64 rng(3);
  for (const auto& m : {fixtures::max3(), fixtures::collapse(), fixtures::max2()}) {
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t n = 1 + rng() % 5;
      std::vector<std::vector<Element>> d(n, std::vector<Element>(n, 0));
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (x != y) d[x][y] = rng() % m->size();
      const oracle::Space s{m->rows(), m->neutral(), d};
      CHECK(validate_qm(default_labels(n), m, d).ok() == oracle::is_quasimetric(s));
    }
  }
}

TEST_CASE("induced topology matches the literal ball definition on the corpus") {
  for (const auto& m : {fixtures::max3(), fixtures::collapse(), fixtures::max2()}) {
    SpaceGenerator gen(17, m, 6);
    for (int i = 0; i < 150; ++i) {
      const auto q = gen.next();
      CHECK(oracle::to_opens(induced_topology(q)) == oracle::induced(oracle::plain(q)));
    }
  }
}

TEST_CASE("small induced topologies") {
  const auto one = fixtures::space(fixtures::max3(), {{0}});
  CHECK(oracle::to_opens(induced_topology(one)) == oracle::Opens{0, 1});

  const auto collapse = canonical_metric_function(fixtures::collapse());
  CHECK(induced_topology(collapse) == FiniteTopology::discrete(3));

  // cliques are the atoms of a partition topology
  const auto t = induced_topology(fixtures::clique9());
  for (std::size_t x = 0; x < 9; ++x) {
    Subset clique(9);
    for (std::size_t y = 3 * (x / 3); y < 3 * (x / 3) + 3; ++y) clique.set(y);
    CHECK(t.minimal_neighbourhood(x) == clique);
  }
}

TEST_CASE("canonical metric function") {
  const auto fm = canonical_metric_function(fixtures::max3());
  CHECK(fm.d(1, 2) == 2);
  CHECK(fm.d(0, 1) == 1);
  CHECK(fm.d(2, 2) == 0);
  CHECK(fm.symmetric());
  CHECK(fm.strict());
  const auto nc = share(validate_mvs(default_labels(3), 0, {{0, 1, 2}, {1, 1, 2}, {2, 1, 2}}).value());
  CHECK_THROWS_AS(canonical_metric_function(nc), HypothesisError);
}

TEST_CASE("open and closed balls coincide over max") {
  const auto fm = canonical_metric_function(fixtures::max3());
  for (std::size_t x = 0; x < 3; ++x)
    for (Element m : {1u, 2u}) CHECK(ball(fm, x, m, BallKind::Open) == ball(fm, x, m, BallKind::Closed));
}

TEST_CASE("closed-ball equivalence requires an atom-free value set") {
  CHECK_THROWS_AS(closed_ball_equivalence(canonical_metric_function(fixtures::collapse())), HypothesisError);
  Report r;
  CHECK(closed_ball_equivalence(fixtures::clique9(), &r));
  CHECK(r.all_pass());
}

TEST_CASE("pullback") {
  const auto q = fixtures::clique9();
  const auto c = pullback(q, {0, 1, 3}, {"p", "q", "r"});
  CHECK(c.report.all_pass());
  CHECK(c.space.d(0, 1) == 1);
  CHECK(c.space.d(0, 2) == 2);
  CHECK(c.space.points() == std::vector<std::string>{"p", "q", "r"});
  // a non-injective map gives a non-strict quasimetric
  const auto folded = pullback(q, {0, 0, 4});
  CHECK_FALSE(folded.space.strict());
  CHECK(folded.report.all_pass());
  CHECK_THROWS_AS(pullback(q, {9}), InputError);
}

TEST_CASE("restriction") {
  const auto q = fixtures::clique9();
  const auto all = restrict(q, full_set(9));
  CHECK(all.space == q);
  const auto one = restrict(q, singleton(9, 4));
  CHECK(one.space.size() == 1);
  const auto clique = restrict(q, subset_of(9, {3, 4, 5}));
  CHECK(clique.report.all_pass());
  CHECK(induced_topology(clique.space) == FiniteTopology::indiscrete(3));
  CHECK(oracle::to_opens(induced_topology(clique.space)) ==
        oracle::trace(9, oracle::to_opens(induced_topology(q)), 0b111000));
  CHECK_THROWS_AS(restrict(q, empty_set(9)), InputError);
}

TEST_CASE("gluing the worked example") {
  const auto t = generate_topology(3, {subset_of(3, {0, 1}), subset_of(3, {1, 2})});
  const auto m = fixtures::max3();
  const std::vector<GluePiece> pieces{
      {subset_of(3, {0, 1}), fixtures::space(m, {{0, 1}, {2, 0}}, {"1", "2"})},
      {subset_of(3, {1, 2}), fixtures::space(m, {{0, 2}, {1, 0}}, {"2", "3"})}};
  const auto g = glue(t, pieces, {"1", "2", "3"});
  const Element inf = 3;
  CHECK(g.space.values().label(inf) == "inf");
  CHECK(g.space.d(0, 1) == 1);
  CHECK(g.space.d(1, 0) == inf);
  CHECK(g.space.d(2, 1) == 1);
  CHECK(g.space.strict());
  CHECK(induced_topology(g.space) == t);
  CHECK(g.report.all_pass());

  // a piece that does not induce the relative topology is refused
  const std::vector<GluePiece> wrong{
      {subset_of(3, {0, 1}), fixtures::space(m, {{0, 2}, {2, 0}})},
      {subset_of(3, {1, 2}), fixtures::space(m, {{0, 2}, {1, 0}})}};
  CHECK_THROWS_AS(glue(t, wrong), InputError);
  // a cover member that is not open is refused
  const std::vector<GluePiece> not_open{
      {subset_of(3, {0}), fixtures::space(m, {{0}})},
      {subset_of(3, {1, 2}), fixtures::space(m, {{0, 2}, {1, 0}})}};
  CHECK_THROWS_AS(glue(t, not_open), InputError);
}

TEST_CASE("gluing non-strict pieces reports strictness as not implied") {
  const auto t = FiniteTopology::indiscrete(2);
  const auto g = glue(t, {{full_set(2), fixtures::space(fixtures::max3(), {{0, 0}, {0, 0}})}});
  CHECK(g.report.all_pass());
  CHECK_FALSE(g.space.strict());
}

TEST_CASE("products") {
  const auto u = fixtures::uniform3();
  const auto p = product({u, u});
  CHECK(p.space.size() == 9);
  CHECK(p.report.all_pass());
  CHECK(induced_topology(p.space) == FiniteTopology::indiscrete(9));

  const auto s = alexandrov_metrize(fixtures::sierpinski()).space;
  const auto ss = product({s, s});
  CHECK(ss.report.all_pass());
  CHECK(induced_topology(ss.space).count_opens() == 6);
  CHECK_THROWS_AS(product({}), InputError);
  CHECK_THROWS_AS(product({u, s}), InputError);
}

TEST_CASE("Alexandrov metrization of the Sierpinski space") {
  const auto c = alexandrov_metrize(fixtures::sierpinski(), {"a", "b"});
  CHECK(c.space.d(0, 1) == 2);
  CHECK(c.space.d(1, 0) == 1);
  CHECK(c.space.strict());
  CHECK(c.report.all_pass());
}

TEST_CASE("cofinite-family space on four points") {
  const auto q = cofinite_family_space(4, subset_of(4, {0, 1}));
  CHECK(q.d(0, 1) == 0);
  CHECK(q.d(1, 0) == 0);
  CHECK(q.d(0, 2) == 2);
  CHECK(q.d(2, 3) == 2);
  CHECK_FALSE(q.strict());
  CHECK_THROWS_AS(cofinite_family_space(4, subset_of(4, {1})), InputError);
}
