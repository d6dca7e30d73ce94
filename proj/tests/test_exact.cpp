#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hepticheck/exact.hpp"

using namespace hepticheck;

namespace {

ExactMatrix random_matrix(std::mt19937_64& rng, int rows, int cols) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 5);
  ExactMatrix M(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      M.at(i, j) = Rational(num(rng), den(rng));
      M.at(i, j).canonicalize();
    }
  return M;
}

} // namespace

TEST_CASE("prime field helpers") {
  CHECK(fp::is_prime(2));
  CHECK(fp::is_prime(1073741827ULL)); // first prime above 2^30
  CHECK_FALSE(fp::is_prime(1073741825ULL));
  std::uint64_t p = 1073741827ULL;
  std::uint64_t a = 123456789ULL;
  CHECK(fp::mul(a, fp::inv(a, p), p) == 1);
  CHECK(fp::pow(a, p - 1, p) == 1);
}

TEST_CASE("modular config is deterministic and in range") {
  auto c1 = ModularConfig::make(42, 3);
  auto c2 = ModularConfig::make(42, 3);
  CHECK(c1.primes == c2.primes);
  CHECK(c1.primes.size() == 3);
  for (auto p : c1.primes) {
    CHECK(p >= (1ULL << 30));
    CHECK(p < (1ULL << 31));
    CHECK(fp::is_prime(p));
  }
  CHECK(c1.primes[0] != c1.primes[1]);
  auto c3 = ModularConfig::make(43, 3);
  CHECK(c1.primes != c3.primes);
}

TEST_CASE("rank of fixed matrices") {
  auto cfg = ModularConfig::make(0);
  ExactMatrix I3(3, 3);
  for (int i = 0; i < 3; ++i) I3.at(i, i) = 1;
  CHECK(rank(I3, cfg) == 3);
  CHECK(rank_exact(I3) == 3);

  ExactMatrix M(2, 3); // second row a multiple of the first
  for (int j = 0; j < 3; ++j) {
    M.at(0, j) = j + 1;
    M.at(1, j) = Rational(2 * (j + 1), 3);
  }
  CHECK(rank(M, cfg) == 1);
}

TEST_CASE("reduce_mod rejects vanishing denominators") {
  auto cfg = ModularConfig::make(7);
  std::uint64_t p = cfg.primes[0];
  ExactMatrix M(1, 1);
  M.at(0, 0) = Rational(1, static_cast<unsigned long>(p));
  ModMatrix out(1, 1, p);
  CHECK_FALSE(reduce_mod(M, p, out));
}

TEST_CASE("kernel vectors are primitive and exact") {
  auto cfg = ModularConfig::make(1);
  // kernel of [1 2 3; 4 5 6] is spanned by (1, -2, 1)
  ExactMatrix M(2, 3);
  int v = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) M.at(i, j) = v++;
  auto ker = kernel_basis(M, cfg);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<Integer>{1, -2, 1});
}

TEST_CASE("random matrices: rank plus kernel dimension equals columns") {
  std::mt19937_64 rng(2024);
  auto cfg = ModularConfig::make(5);
  for (int trial = 0; trial < 50; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    auto M = random_matrix(rng, rows, cols);
    int r = rank(M, cfg);
    auto ker = kernel_basis(M, cfg);
    CHECK(r + static_cast<int>(ker.size()) == cols);
    CHECK(r == rank_exact(M));
    // primitivity: first nonzero entry positive, gcd 1
    for (const auto& v : ker) {
      Integer g = 0;
      const Integer* first = nullptr;
      for (const auto& x : v) {
        g = gcd(g, x);
        if (first == nullptr && x != 0) first = &x;
      }
      REQUIRE(first != nullptr);
      CHECK(*first > 0);
      CHECK(g == 1);
    }
  }
}

TEST_CASE("modular and exact paths agree on kernels") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    auto cfg = ModularConfig::make(trial);
    auto exact_cfg = cfg;
    exact_cfg.force_exact = true;
    int rows = 2 + static_cast<int>(rng() % 6);
    int cols = 2 + static_cast<int>(rng() % 6);
    auto M = random_matrix(rng, rows, cols);
    CHECK(rank(M, cfg) == rank(M, exact_cfg));
    CHECK(kernel_basis(M, cfg) == kernel_basis(M, exact_cfg));
  }
}

TEST_CASE("ordered row reduction follows the requested column order") {
  auto cfg = ModularConfig::make(0);
  ExactMatrix M(1, 3);
  M.at(0, 0) = 1;
  M.at(0, 1) = 1;
  M.at(0, 2) = 1;
  std::vector<int> order = {2, 1, 0};
  auto res = row_reduce_ordered(M, order, cfg);
  REQUIRE(res.pivot_cols.size() == 1);
  CHECK(res.pivot_cols[0] == 2);
  std::vector<int> bad = {0, 0, 1};
  CHECK_THROWS(row_reduce_ordered(M, bad, cfg));
}
