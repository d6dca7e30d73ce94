#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "hepticheck/builtin_data.hpp"
#include "hepticheck/curve.hpp"

using namespace hepticheck;

namespace {

std::map<std::string, SyzygySpec> variants() {
  std::istringstream in{std::string(builtin::syzygy_file())};
  return parse_syzygy_file(in);
}

ParamCurve printed() {
  std::istringstream in{std::string(builtin::printed_curve_file())};
  return parse_curve_file(in);
}

} // namespace

TEST_CASE("syzygy file parses into two validated variants") {
  auto vs = variants();
  REQUIRE(vs.size() == 2);
  REQUIRE(vs.count("as-printed") == 1);
  REQUIRE(vs.count("u3-corrected") == 1);
  for (auto& [name, spec] : vs) {
    spec.validate();
    REQUIRE(spec.rows.size() == 4);
    CHECK(spec.rows[0].degree == 5);
    CHECK(spec.rows[1].degree == 4);
    CHECK(spec.rows[2].degree == 4);
    CHECK(spec.rows[3].degree == 3);
  }
  // the two variants differ exactly in the fourth form of the last row
  CHECK(vs.at("as-printed").rows[3].g[3].c == std::vector<Integer>{2, 1, 1, 0});
  CHECK(vs.at("u3-corrected").rows[3].g[3].c == std::vector<Integer>{1, 1, 1, 1});
}

TEST_CASE("printed curve parses") {
  auto c = printed();
  CHECK(c.f[0].c[1] == 2024965316);
  CHECK(c.f[4].c[0] == 4049930632);
  CHECK(c.f[2].c[16] == -2531937246);
  for (int i = 0; i < 5; ++i) CHECK(c.f[i].degree == 16);
}

TEST_CASE("system shape and variant ranks") {
  auto vs = variants();
  auto cfg = ModularConfig::make(0);
  auto M_as = assemble_system(vs.at("as-printed"));
  CHECK(M_as.rows() == 84);
  CHECK(M_as.cols() == 85);
  CHECK(rank(M_as, cfg) == 83); // the uncorrected reading is degenerate
  auto M_u3 = assemble_system(vs.at("u3-corrected"));
  CHECK(rank(M_u3, cfg) == 84);
}

TEST_CASE("solving the corrected system") {
  auto vs = variants();
  auto cfg = ModularConfig::make(0);
  auto sol = solve_curve(vs.at("u3-corrected"), cfg);
  CHECK(sol.rank == 84);
  CHECK(sol.kernel_dim == 1);
  for (const auto& row : vs.at("u3-corrected").rows)
    CHECK(syzygy_residual(row, sol.curve).is_zero());
  CHECK_THROWS(solve_curve(vs.at("as-printed"), cfg)); // kernel dimension 2

  auto mr = match_printed(sol.curve, printed());
  CHECK(mr.total == 85);
  CHECK(mr.matches + static_cast<int>(mr.diffs.size()) == 85);
  CHECK(mr.scale != 0);
}

TEST_CASE("printed solution residuals") {
  auto vs = variants();
  auto c = printed();
  // the printed vectors satisfy rows 0, 2, 3 of the uncorrected reading but
  // fail row 1 under both readings
  CHECK(syzygy_residual(vs.at("as-printed").rows[0], c).is_zero());
  CHECK_FALSE(syzygy_residual(vs.at("as-printed").rows[1], c).is_zero());
  CHECK(syzygy_residual(vs.at("as-printed").rows[2], c).is_zero());
  CHECK(syzygy_residual(vs.at("as-printed").rows[3], c).is_zero());
  CHECK_FALSE(syzygy_residual(vs.at("u3-corrected").rows[3], c).is_zero());
}

TEST_CASE("ideal slices of the printed curve") {
  auto c = printed();
  auto cfg = ModularConfig::make(0);
  int expected[] = {0, 0, 0, 5, 45};
  for (int m = 1; m <= 5; ++m) {
    auto sl = ideal_slice(c, m, cfg);
    CHECK(sl.kernel_dim == expected[m - 1]);
  }
  // exact spot checks agree with the modular path
  CHECK(ideal_slice_dim_exact(c, 3) == 0);
  CHECK(ideal_slice_dim_exact(c, 4) == 5);
}

TEST_CASE("initial ideal of the printed curve matches the printed generators") {
  auto c = printed();
  auto cfg = ModularConfig::make(0);
  auto I = initial_ideal(c, 6, MonomialOrder::GrevLex, cfg);
  auto P = printed_initial_ideal();
  CHECK(I == P);
  CHECK(I.max_gen_degree() == 5);
  CHECK(is_borel_fixed(I));
  CHECK(is_saturated(I));

  auto verdict = conclude_i_zero(c, I, cfg);
  CHECK(verdict.status == IZeroVerdict::Status::IZero);
  CHECK(verdict.regularity == 5);
}

TEST_CASE("coordinate changes preserve slice dimensions") {
  auto c = printed();
  auto cfg = ModularConfig::make(0);
  std::vector<std::vector<int>> A = {{1, 1, 0, 0, 0},
                                     {0, 1, 0, 0, 0},
                                     {0, 0, 1, 2, 0},
                                     {0, 0, 0, 1, 0},
                                     {1, 0, 0, 0, 1}};
  auto c2 = change_coordinates(c, A);
  for (int m = 3; m <= 4; ++m)
    CHECK(ideal_slice(c2, m, cfg).kernel_dim == ideal_slice(c, m, cfg).kernel_dim);
}

TEST_CASE("biform arithmetic") {
  BiForm a{1, {1, 1}};  // t + u
  BiForm b{1, {1, -1}}; // t - u
  auto p = mul(a, b);   // t^2 - u^2
  CHECK(p.degree == 2);
  CHECK(p.c == std::vector<Integer>{1, 0, -1});
  CHECK_FALSE(p.is_zero());
  CHECK(BiForm::zero(3).is_zero());
}
