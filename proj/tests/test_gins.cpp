#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hepticheck/gins.hpp"

using namespace hepticheck;

TEST_CASE("lambda sequence validation") {
  LambdaSequence ok{{9, 7}};
  ok.validate();
  CHECK(ok.degree() == 16);
  CHECK(ok.k() == 2);

  CHECK_THROWS(LambdaSequence{{16}}.validate());       // k = 1
  CHECK_THROWS(LambdaSequence{{8, 8}}.validate());     // not strictly decreasing
  CHECK_THROWS(LambdaSequence{{10, 6}}.validate());    // gap of 4 breaks the GP bound
  CHECK_THROWS(LambdaSequence{{9, 6}}.validate());     // wrong degree, 15
  CHECK_THROWS(LambdaSequence{{10, 5, 1}}.validate()); // lambda_0 > 9
}

TEST_CASE("sequence to ideal") {
  auto I = to_ideal(LambdaSequence{{9, 7}});
  REQUIRE(I.gens.size() == 3);
  CHECK(I.gens[0].e == std::vector<int>{2, 0, 0});
  CHECK(I.gens[1].e == std::vector<int>{1, 7, 0});
  CHECK(I.gens[2].e == std::vector<int>{0, 9, 0});
  CHECK(is_borel_fixed(I));
  CHECK(is_saturated(I));
  CHECK(regularity_saturated_borel(I) == 9);
}

TEST_CASE("cone genus of (9,7)") {
  auto r = g_lambda(LambdaSequence{{9, 7}});
  CHECK(r.value == 49);
  CHECK(r.h0_direct == 124);
  CHECK(r.h0_closed_tail == 124);
}

TEST_CASE("cone genus of (7,5,4)") {
  auto r = g_lambda(LambdaSequence{{7, 5, 4}});
  CHECK(r.value == 35);
  CHECK(r.h0_direct == 110);
}

TEST_CASE("enumeration: unique k=2 member, consistency at m in {9,10,11}") {
  auto all = enumerate_sequences(16);
  REQUIRE(!all.empty());
  int k2 = 0;
  long k3max = -1;
  for (const auto& g : all) {
    g.sequence.validate();
    if (g.sequence.k() == 2) {
      ++k2;
      CHECK(g.sequence.lambda == std::vector<int>{9, 7});
      CHECK(g.g_lambda == 49);
      CHECK(g.h0_at_9 == 124);
    } else {
      k3max = std::max(k3max, g.g_lambda);
    }
    // closed form vs direct count agree at every truncation (throws on mismatch)
    for (int m : {9, 10, 11}) g_lambda(g.sequence, m);
  }
  CHECK(k2 == 1);
  // the k >= 3 maximum is attained at (7,5,4); the printed claim says <= 31
  CHECK(k3max == 35);
  // sorted descending by cone genus
  for (size_t i = 1; i < all.size(); ++i)
    CHECK(all[i - 1].g_lambda >= all[i].g_lambda);
}
