#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hepticheck/gins.hpp"
#include "hepticheck/rewriting.hpp"

using namespace hepticheck;

namespace {

MonomialIdeal start_ideal() { return to_ideal(LambdaSequence{{9, 7}}); }

} // namespace

TEST_CASE("rule applicability") {
  CHECK(rule_applicable(Monomial{{2, 0, 0}}, RewriteRule::PurePower));
  CHECK_FALSE(rule_applicable(Monomial{{2, 1, 0}}, RewriteRule::PurePower));
  CHECK(rule_applicable(Monomial{{2, 1, 0}}, RewriteRule::Mixed));
  CHECK(rule_applicable(Monomial{{0, 9, 0}}, RewriteRule::Mixed));
  // rules never touch monomials involving the last variable
  CHECK_FALSE(rule_applicable(Monomial{{2, 0, 1}}, RewriteRule::PurePower));
  CHECK_FALSE(rule_applicable(Monomial{{1, 1, 1}}, RewriteRule::Mixed));
}

TEST_CASE("applying rule 1 to the quadric generator") {
  auto t = GeneratorTree::from_ideal(start_ideal());
  auto t2 = apply_rule(t, Monomial{{2, 0, 0}}, RewriteRule::PurePower);
  CHECK(t2.applied.size() == 1);
  CHECK(t2.leaves.contains(Monomial{{3, 0, 0}}));
  CHECK(t2.leaves.contains(Monomial{{2, 1, 0}}));
  CHECK(t2.leaves.contains(Monomial{{2, 0, 1}}));
  CHECK_FALSE(t2.leaves.contains(Monomial{{2, 0, 0}}));
  CHECK_THROWS(apply_rule(t, Monomial{{5, 0, 0}}, RewriteRule::PurePower));
}

TEST_CASE("bound_after: 49 -> 48 and 49 -> 40") {
  auto t = GeneratorTree::from_ideal(start_ideal());
  auto one = apply_rule(t, Monomial{{2, 0, 0}}, RewriteRule::PurePower);
  CHECK(bound_after(one, 49) == 48);

  // nine rewritings, all on generators of degree below 7
  auto cur = one;
  int steps = 1;
  while (steps < 9) {
    bool advanced = false;
    for (const auto& g : cur.leaves.gens) {
      if (g.degree() >= 7) continue;
      if (rule_applicable(g, RewriteRule::PurePower)) {
        cur = apply_rule(cur, g, RewriteRule::PurePower);
      } else if (rule_applicable(g, RewriteRule::Mixed)) {
        cur = apply_rule(cur, g, RewriteRule::Mixed);
      } else {
        continue;
      }
      ++steps;
      advanced = true;
      break;
    }
    REQUIRE(advanced);
  }
  CHECK(bound_after(cur, 49) == 40);
}

TEST_CASE("Bezout caps") {
  auto c = BezoutConstraints::defaults();
  auto start = start_ideal();
  CHECK(c.cap(2, start) == 0);
  CHECK(c.cap(3, start) == 1);
  // no cubic generator in the start ideal except x0^2 multiples; the
  // conditional quartic cap counts multiples of a principal cubic
  auto with_cubic = minimalize(3, {Monomial{{3, 0, 0}}});
  CHECK(c.cap(4, with_cubic) == 4);
  auto no_cubic = minimalize(3, {Monomial{{0, 5, 0}}});
  CHECK(c.cap(4, no_cubic) == 1);
  CHECK_FALSE(c.satisfied(start)); // the quadric violates the degree-2 cap
  CHECK(c.max_constrained_degree() == 4);
}

TEST_CASE("minimum forced rewritings: deterministic search") {
  auto r1 = min_forced_rewritings(start_ideal(), BezoutConstraints::defaults(), 7, 16);
  auto r2 = min_forced_rewritings(start_ideal(), BezoutConstraints::defaults(), 7, 16);
  REQUIRE(r1.status == RewriteSearchResult::Status::Found);
  CHECK(r1.min_rewritings == 5);
  CHECK(r1.min_rewritings == r2.min_rewritings);
  CHECK(r1.states_explored == r2.states_explored);
  REQUIRE(r1.witness.size() == r2.witness.size());
  for (size_t i = 0; i < r1.witness.size(); ++i)
    CHECK(r1.witness[i].target == r2.witness[i].target);

  // replaying the witness reaches a constraint-satisfying state
  auto t = GeneratorTree::from_ideal(start_ideal());
  for (const auto& step : r1.witness) t = apply_rule(t, step.target, step.rule);
  CHECK(BezoutConstraints::defaults().satisfied(t.leaves));
}

TEST_CASE("already satisfied start state") {
  // a deep ideal with no generator under the caps' reach
  auto deep = minimalize(3, {Monomial{{0, 9, 0}}, Monomial{{5, 0, 0}}});
  auto c = BezoutConstraints::defaults();
  if (c.satisfied(deep)) {
    auto r = min_forced_rewritings(deep, c, 7, 16);
    CHECK(r.status == RewriteSearchResult::Status::AlreadySatisfied);
    CHECK(r.min_rewritings == 0);
  }
}
