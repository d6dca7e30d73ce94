#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "hepticheck/monomial.hpp"

using namespace hepticheck;

namespace {

// Borel closure: add every swap-down variant, then minimalize.
MonomialIdeal borel_closure(int num_vars, std::vector<Monomial> gens) {
  std::set<std::vector<int>> seen;
  std::vector<Monomial> work = gens;
  while (!work.empty()) {
    Monomial m = work.back();
    work.pop_back();
    if (!seen.insert(m.e).second) continue;
    for (int j = 1; j < num_vars; ++j)
      for (int i = 0; i < j; ++i)
        if (m.e[j] > 0) work.push_back(m.swap_down(i, j));
  }
  std::vector<Monomial> all;
  for (const auto& e : seen) all.push_back(Monomial{e});
  return minimalize(num_vars, all);
}

} // namespace

TEST_CASE("grevlex order on quadrics in three variables") {
  auto ms = monomials_of_degree(3, 2, MonomialOrder::GrevLex);
  REQUIRE(ms.size() == 6);
  CHECK(ms[0].e == std::vector<int>{2, 0, 0});
  CHECK(ms[1].e == std::vector<int>{1, 1, 0});
  CHECK(ms[2].e == std::vector<int>{0, 2, 0});
  CHECK(ms[3].e == std::vector<int>{1, 0, 1});
  CHECK(ms[4].e == std::vector<int>{0, 1, 1});
  CHECK(ms[5].e == std::vector<int>{0, 0, 2});
  // degree refinement
  CHECK(compare(Monomial{{0, 0, 2}}, Monomial{{1, 0, 0}}, MonomialOrder::GrevLex) > 0);
}

TEST_CASE("divisibility and products") {
  Monomial a{{1, 2, 0}}, b{{1, 1, 0}};
  CHECK(b.divides(a));
  CHECK_FALSE(a.divides(b));
  CHECK((a * b).e == std::vector<int>{2, 3, 0});
  CHECK(a.degree() == 3);
}

TEST_CASE("minimalize removes redundant generators") {
  auto I = minimalize(3, {Monomial{{2, 0, 0}}, Monomial{{2, 1, 0}}, Monomial{{0, 3, 0}}});
  REQUIRE(I.gens.size() == 2);
  CHECK(I.gens[0].e == std::vector<int>{2, 0, 0});
  CHECK(I.gens[1].e == std::vector<int>{0, 3, 0});
}

TEST_CASE("Borel fixedness") {
  auto borel = minimalize(3, {Monomial{{2, 0, 0}}, Monomial{{1, 1, 0}}, Monomial{{0, 2, 0}}});
  CHECK(is_borel_fixed(borel));
  auto not_borel = minimalize(3, {Monomial{{0, 2, 0}}});
  CHECK_FALSE(is_borel_fixed(not_borel));
  CHECK(is_borel_fixed_bruteforce(borel, 5));
  CHECK_FALSE(is_borel_fixed_bruteforce(not_borel, 5));
}

TEST_CASE("saturation criterion") {
  auto sat = minimalize(3, {Monomial{{2, 0, 0}}, Monomial{{1, 7, 0}}, Monomial{{0, 9, 0}}});
  CHECK(is_saturated(sat));
  auto unsat = minimalize(3, {Monomial{{1, 0, 1}}});
  CHECK_FALSE(is_saturated(unsat));
}

TEST_CASE("Hilbert counts of the (9,7) cone ideal") {
  auto I = minimalize(3, {Monomial{{2, 0, 0}}, Monomial{{1, 7, 0}}, Monomial{{0, 9, 0}}});
  CHECK(hilbert_count(I, 9, Side::Quotient) == 16);
  CHECK(hilbert_count(I, 9, Side::Ideal) + 16 == binomial(11, 2));
  CHECK(regularity_saturated_borel(I) == 9);
}

TEST_CASE("binomial") {
  CHECK(binomial(12, 5) == 792);
  CHECK(binomial(11, 2) == 55);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("random Borel-fixed saturated ideals behave") {
  std::mt19937_64 rng(99);
  int built = 0;
  while (built < 200) {
    int nv = 3 + static_cast<int>(rng() % 2);
    // seed generators avoid the last variable, so the closure is saturated
    std::vector<Monomial> seed;
    int count = 1 + static_cast<int>(rng() % 3);
    for (int s = 0; s < count; ++s) {
      std::vector<int> e(nv, 0);
      int deg = 1 + static_cast<int>(rng() % 5);
      for (int d = 0; d < deg; ++d) ++e[rng() % (nv - 1)];
      seed.push_back(Monomial{e});
    }
    auto I = borel_closure(nv, seed);
    if (I.is_zero()) continue;
    ++built;
    CHECK(is_borel_fixed(I));
    CHECK(is_saturated(I));
    int top = I.max_gen_degree();
    CHECK(is_borel_fixed_bruteforce(I, top + 1));
    for (int m = top; m <= top + 2; ++m)
      CHECK(hilbert_count(I, m, Side::Ideal) + hilbert_count(I, m, Side::Quotient) ==
            binomial(m + nv - 1, nv - 1));
    CHECK(regularity_saturated_borel(I) == top);
  }
}
