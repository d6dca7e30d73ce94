#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hepticheck/builtin_data.hpp"
#include "hepticheck/singularity.hpp"

using namespace hepticheck;

namespace {

Branch branch(std::vector<std::vector<std::pair<int, Integer>>> coords) {
  return Branch{std::move(coords)};
}

std::vector<SingularityRecord> catalog() {
  std::istringstream in{std::string(builtin::singularity_catalog_file())};
  return parse_catalog_file(in);
}

} // namespace

TEST_CASE("semigroup gap counts") {
  CHECK(semigroup_delta({2, 3}) == 1);
  CHECK(semigroup_delta({3, 4, 5}) == 2);
  CHECK(semigroup_delta({4, 5, 6, 7}) == 3);
  CHECK(semigroup_delta({3, 5}) == 4);
  CHECK(semigroup_delta({2, 5}) == 2);
  CHECK(semigroup_delta({1}) == 0);
  CHECK_THROWS(semigroup_delta({2, 4}));  // gcd 2
  CHECK_THROWS(semigroup_delta({}));
}

TEST_CASE("delta invariants of basic germs") {
  BranchParam node{{branch({{{1, 1}}, {}}), branch({{}, {{1, 1}}})}};
  CHECK(delta_invariant(node) == 1);

  BranchParam cusp{{branch({{{2, 1}}, {{3, 1}}})}};
  CHECK(delta_invariant(cusp) == 1);

  BranchParam tacnode{{branch({{{1, 1}}, {}}), branch({{{1, 1}}, {{2, 1}}})}};
  CHECK(delta_invariant(tacnode) == 2);

  BranchParam t3t5{{branch({{{3, 1}}, {{5, 1}}})}};
  CHECK(delta_invariant(t3t5) == 4);

  // degenerate inputs are rejected
  CHECK_THROWS(delta_invariant(BranchParam{}));
  CHECK_THROWS(delta_invariant(BranchParam{{branch({{}, {}})}}));
}

TEST_CASE("monomial branches agree with the semigroup oracle") {
  for (auto exps : {std::vector<int>{2, 3}, {2, 5}, {3, 4, 5}, {4, 5, 6, 7}, {3, 5}}) {
    std::vector<std::vector<std::pair<int, Integer>>> coords;
    for (int e : exps) coords.push_back({{e, 1}});
    BranchParam p{{branch(coords)}};
    CHECK(delta_invariant(p) == semigroup_delta(exps));
  }
}

TEST_CASE("pairwise intersection multiplicities") {
  Branch xaxis = branch({{{1, 1}}, {}});
  Branch yaxis = branch({{}, {{1, 1}}});
  CHECK(pair_intersection_multiplicity(xaxis, yaxis) == 1);

  Branch parab = branch({{{1, 1}}, {{2, 1}}});
  CHECK(pair_intersection_multiplicity(xaxis, parab) == 2); // shared tangent

  Branch cusp3 = branch({{{2, 1}}, {{3, 1}}, {}});
  Branch zaxis3 = branch({{}, {}, {{1, 1}}});
  CHECK(pair_intersection_multiplicity(cusp3, zaxis3) == 1);
}

TEST_CASE("pairwise decomposition of two-branch deltas") {
  for (const auto& rec : catalog()) {
    const auto& br = rec.param.branches;
    for (size_t i = 0; i < br.size(); ++i)
      for (size_t j = i + 1; j < br.size(); ++j) {
        BranchParam pi{{br[i]}}, pj{{br[j]}}, pij{{br[i], br[j]}};
        int lhs = delta_invariant(pij);
        int rhs = delta_invariant(pi) + delta_invariant(pj) +
                  pair_intersection_multiplicity(br[i], br[j]);
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("catalog parses and audits") {
  auto cat = catalog();
  REQUIRE(cat.size() == 17);
  auto audit = catalog_audit(cat);
  REQUIRE(audit.size() == cat.size());
  for (const auto& line : audit) {
    if (line.name == "monomial-t3t5") {
      CHECK(line.expected == 3);
      CHECK(line.computed == 4); // the printed value disagrees with the gap count
      CHECK_FALSE(line.match);
    } else {
      CHECK(line.match);
    }
    if (line.semigroup_check >= 0) CHECK(line.semigroup_check == line.computed);
  }
}

TEST_CASE("catalog format errors") {
  std::istringstream bad1("branch 1:1\n");
  CHECK_THROWS(parse_catalog_file(bad1));
  std::istringstream bad2("record twisty 1 2\nbranch 1:1 | 0\n");
  CHECK_THROWS(parse_catalog_file(bad2)); // declared two branches, lists one
}

TEST_CASE("ramification codimension formulas") {
  RamificationType rt{{2, 3, 5}};
  CHECK(ramification_codim(rt) == 4);
  CHECK(ramification_codim_alt(rt) == 7); // differs by n = 3
  CHECK_THROWS(RamificationType{{3, 2}}.validate());
  CHECK_THROWS(RamificationType{{0, 1}}.validate());
}

TEST_CASE("linearized rank conditions at strictly increasing types") {
  for (auto r : {std::vector<int>{2, 3}, {2, 3, 5}, {3, 4, 6}, {2, 4, 5, 7}, {2, 3, 4, 5, 6}}) {
    RamificationType rt{r};
    auto lin = linearized_rank_conditions(rt);
    CHECK_FALSE(lin.model_violation);
    CHECK(lin.independent_conditions == ramification_codim(rt));
  }
}

TEST_CASE("tied types break the codimension formula") {
  // at a tied type the monomial model degenerates: the true condition count
  // exceeds the formula (documented anomaly)
  RamificationType tied{{2, 2}};
  auto lin = linearized_rank_conditions(tied);
  CHECK(lin.independent_conditions == 2);
  CHECK(ramification_codim(tied) == 1);
}

TEST_CASE("quadruple point codimension and lemma verdict") {
  auto q = quadruple_point_codim(5, 4, 5, 4);
  CHECK(q.fixed == 20);
  CHECK(q.varied == 11);
  CHECK(q.varied >= 9);
  CHECK(lemma_verdict(3) == 9);
  CHECK(lemma_verdict(2) == 6);
  CHECK(lemma_verdict(21) == 9);
  CHECK(lemma_verdict(0) == 0);
  CHECK_THROWS(lemma_verdict(-1));
}

TEST_CASE("delta stability guard") {
  // truncation too small for the conductor: the T vs T+2 check must throw
  BranchParam deep{{branch({{{7, 1}}, {{8, 1}}})}};
  CHECK_THROWS(delta_invariant(deep, 4));
  CHECK(delta_invariant(deep, 48) == semigroup_delta({7, 8}));
}
