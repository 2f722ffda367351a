#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "mvstop/quniform.hpp"
#include "oracles.hpp"

using namespace mvstop;

namespace {

Entourage random_relation(std::mt19937_64& rng, std::size_t n, bool diagonal) {
  Entourage u(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if ((diagonal && x == y) || rng() % 3 == 0) u.set(x, y);
  return u;
}

Entourage clique_relation() {
  Entourage u(9);
  for (std::size_t x = 0; x < 9; ++x)
    for (std::size_t y = 0; y < 9; ++y)
      if (x / 3 == y / 3) u.set(x, y);
  return u;
}

}  // namespace

TEST_CASE("composition basics") {
  const auto d = Entourage::diagonal(4);
  CHECK(compose(d, d) == d);
  std::mt19937_64 rng(1);
  const auto u = random_relation(rng, 4, true);
  CHECK(compose(Entourage::full(4), u) == Entourage::full(4));
  CHECK(compose(u, Entourage::full(4)) == Entourage::full(4));
  const auto c = clique_relation();
  CHECK(compose(c, c) == c);
}

TEST_CASE("composition applies the right operand first") {
  // b: 0 -> 1, a: 1 -> 2, so a∘b relates 0 to 2
  const auto a = Entourage::from_pairs(3, {{1, 2}});
  const auto b = Entourage::from_pairs(3, {{0, 1}});
  CHECK(compose(a, b) == Entourage::from_pairs(3, {{0, 2}}));
  CHECK(compose(b, a).count() == 0);
}

TEST_CASE("composition matches the boolean matrix oracle") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 7;
    const auto a = random_relation(rng, n, false);
    const auto b = random_relation(rng, n, false);
    CHECK(oracle::relation(compose(a, b)) == oracle::compose(oracle::relation(a), oracle::relation(b)));
  }
}

TEST_CASE("entourage helpers") {
  const auto u = Entourage::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}});
  CHECK(u.contains_diagonal());
  CHECK(u.inverse() == Entourage::from_pairs(2, {{0, 0}, {1, 1}, {1, 0}}));
  CHECK(u.count() == 3);
  CHECK(Entourage::diagonal(2).is_subset_of(u));
  CHECK_THROWS_AS(Entourage::from_pairs(2, {{0, 2}}), InputError);
}

TEST_CASE("base axioms") {
  CHECK(validate_base({Entourage::full(3)}).ok());

  // U∘U ⊄ U and nothing smaller in the family
  const auto u = Entourage::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {1, 2}});
  const auto r = validate_base({u});
  REQUIRE_FALSE(r.ok());
  CHECK(r.violation().axiom == "UB3");
  CHECK(r.violation().witness == std::vector<std::size_t>{0});

  const auto no_diag = validate_base({Entourage::from_pairs(2, {{0, 0}})});
  REQUIRE_FALSE(no_diag.ok());
  CHECK(no_diag.violation().axiom == "UB1");

  const auto a = Entourage::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 1}});
  const auto b = Entourage::from_pairs(3, {{0, 0}, {1, 1}, {2, 2}, {0, 2}});
  const auto ub2 = validate_base({a, b});
  REQUIRE_FALSE(ub2.ok());
  CHECK(ub2.violation().axiom == "UB2");

  CHECK_THROWS_AS(validate_base({}), InputError);
  CHECK_THROWS_AS(validate_base({Entourage::full(2), Entourage::full(3)}), InputError);

  const auto dup = validate_base({Entourage::full(2), Entourage::full(2)});
  REQUIRE(dup.ok());
  CHECK(dup.value().members().size() == 1);
}

TEST_CASE("topologies of bases") {
  CHECK(base_topology(validate_base({Entourage::diagonal(3)}).value()) == FiniteTopology::discrete(3));
  CHECK(base_topology(validate_base({Entourage::full(3)}).value()) == FiniteTopology::indiscrete(3));
  const auto clique = validate_base({clique_relation(), Entourage::full(9)}).value();
  CHECK(base_topology(clique) == induced_topology(fixtures::clique9()));
}

TEST_CASE("base of a quasimetric space") {
  const auto qb = base_from_qm(fixtures::clique9());
  REQUIRE(qb.base.members().size() == 2);
  CHECK(qb.base.members()[qb.member_of[1]] == clique_relation());
  CHECK(qb.base.members()[qb.member_of[2]] == Entourage::full(9));
  CHECK(qb.report.all_pass());

  const auto one = base_from_qm(fixtures::space(fixtures::max3(), {{0}}));
  REQUIRE(one.base.members().size() == 1);
  CHECK(one.base.members().front() == Entourage::diagonal(1));

  CHECK_THROWS_AS(base_from_qm(canonical_metric_function(fixtures::collapse())), HypothesisError);
}

TEST_CASE("uniformities") {
  const auto clique = validate_base({clique_relation(), Entourage::full(9)}).value();
  CHECK(check_uniformity(clique));
  CHECK(check_uniformity(validate_base({Entourage::diagonal(3)}).value()));
  const auto up = validate_base({Entourage::from_pairs(2, {{0, 0}, {1, 1}, {0, 1}})}).value();
  CHECK_FALSE(check_uniformity(up));
  CHECK_FALSE(up.symmetric_closure());
}

TEST_CASE("cofinal bases") {
  const auto a = validate_base({clique_relation(), Entourage::full(9)}).value();
  const auto b = validate_base({clique_relation()}).value();
  CHECK(mutually_cofinal(a, b));
  CHECK(bases_same_topology(a, b));
  const auto c = validate_base({Entourage::diagonal(9)}).value();
  CHECK_FALSE(mutually_cofinal(a, c));
  CHECK_THROWS_AS(bases_same_topology(a, c), HypothesisError);
  CHECK(in_quasiuniformity(a, Entourage::full(9)));
  CHECK_FALSE(in_quasiuniformity(a, Entourage::diagonal(9)));
}
