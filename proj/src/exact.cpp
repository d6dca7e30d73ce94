#include "hepticheck/exact.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace hepticheck {

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  ExactMatrix M(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("from_rows: ragged rows");
    for (int j = 0; j < c; ++j) M.at(i, j) = rows[i][j];
  }
  return M;
}

namespace fp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) { return pow(a, p - 2, p); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

} // namespace fp

static std::uint64_t nth_prime_from_seed(std::uint64_t seed, int index) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1u << 30, (1ull << 31) - 1);
  int found = 0;
  for (;;) {
    std::uint64_t c = dist(rng) | 1;
    if (fp::is_prime(c)) {
      if (found == index) return c;
      ++found;
    }
  }
}

ModularConfig ModularConfig::make(std::uint64_t seed, int count) {
  if (count < 2) throw std::invalid_argument("ModularConfig: need >= 2 primes");
  ModularConfig cfg;
  cfg.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> dist(1u << 30, (1ull << 31) - 1);
  while (static_cast<int>(cfg.primes.size()) < count) {
    std::uint64_t c = dist(rng) | 1;
    if (fp::is_prime(c) &&
        std::find(cfg.primes.begin(), cfg.primes.end(), c) == cfg.primes.end())
      cfg.primes.push_back(c);
  }
  return cfg;
}

std::uint64_t ModularConfig::fresh_prime(int index) const {
  // Disjoint deterministic stream keyed off the seed.
  return nth_prime_from_seed(seed ^ 0x9e3779b97f4a7c15ull, index);
}

int ModMatrix::rank() const {
  ModMatrix M = *this;
  int rk = 0;
  for (int c = 0; c < cols_ && rk < rows_; ++c) {
    int piv = -1;
    for (int r = rk; r < rows_; ++r)
      if (M.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(M.at(piv, j), M.at(rk, j));
    std::uint64_t iv = fp::inv(M.at(rk, c), p_);
    for (int j = c; j < cols_; ++j) M.at(rk, j) = fp::mul(M.at(rk, j), iv, p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rk || M.at(r, c) == 0) continue;
      std::uint64_t f = M.at(r, c);
      for (int j = c; j < cols_; ++j) {
        std::uint64_t v = M.at(r, j) + p_ - fp::mul(f, M.at(rk, j), p_);
        M.at(r, j) = v >= p_ ? v - p_ : v;
      }
    }
    ++rk;
  }
  return rk;
}

std::vector<std::vector<std::uint64_t>> ModMatrix::kernel_basis() const {
  ModMatrix M = *this;
  std::vector<int> pivot_of_col(cols_, -1);
  int rk = 0;
  for (int c = 0; c < cols_ && rk < rows_; ++c) {
    int piv = -1;
    for (int r = rk; r < rows_; ++r)
      if (M.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(M.at(piv, j), M.at(rk, j));
    std::uint64_t iv = fp::inv(M.at(rk, c), p_);
    for (int j = c; j < cols_; ++j) M.at(rk, j) = fp::mul(M.at(rk, j), iv, p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rk || M.at(r, c) == 0) continue;
      std::uint64_t f = M.at(r, c);
      for (int j = c; j < cols_; ++j) {
        std::uint64_t v = M.at(r, j) + p_ - fp::mul(f, M.at(rk, j), p_);
        M.at(r, j) = v >= p_ ? v - p_ : v;
      }
    }
    pivot_of_col[c] = rk;
    ++rk;
  }
  std::vector<std::vector<std::uint64_t>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<std::uint64_t> v(cols_, 0);
    v[c] = 1;
    for (int j = 0; j < cols_; ++j) {
      int pr = pivot_of_col[j];
      if (pr >= 0 && M.at(pr, c) != 0) v[j] = p_ - M.at(pr, c);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> ModMatrix::pivot_columns(std::span<const int> column_order) const {
  ModMatrix M = *this;
  std::vector<int> pivots;
  int rk = 0;
  for (int c : column_order) {
    if (rk >= rows_) break;
    int piv = -1;
    for (int r = rk; r < rows_; ++r)
      if (M.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    for (int j = 0; j < cols_; ++j) std::swap(M.at(piv, j), M.at(rk, j));
    std::uint64_t iv = fp::inv(M.at(rk, c), p_);
    for (int j = 0; j < cols_; ++j) M.at(rk, j) = fp::mul(M.at(rk, j), iv, p_);
    for (int r = 0; r < rows_; ++r) {
      if (r == rk || M.at(r, c) == 0) continue;
      std::uint64_t f = M.at(r, c);
      for (int j = 0; j < cols_; ++j) {
        std::uint64_t v = M.at(r, j) + p_ - fp::mul(f, M.at(rk, j), p_);
        M.at(r, j) = v >= p_ ? v - p_ : v;
      }
    }
    pivots.push_back(c);
    ++rk;
  }
  return pivots;
}

bool reduce_mod(const ExactMatrix& M, std::uint64_t p, ModMatrix& out) {
  out = ModMatrix(M.rows(), M.cols(), p);
  mpz_class pz(static_cast<unsigned long>(p));
  for (int r = 0; r < M.rows(); ++r) {
    for (int c = 0; c < M.cols(); ++c) {
      const Rational& q = M.at(r, c);
      mpz_class den = q.get_den() % pz;
      if (den == 0) return false;
      mpz_class num = q.get_num() % pz;
      if (num < 0) num += pz;
      std::uint64_t n = num.get_ui();
      std::uint64_t d = den.get_ui();
      out.at(r, c) = fp::mul(n, fp::inv(d, p), p);
    }
  }
  return true;
}

// Full exact RREF. Returns pivot column per row and leaves reduced rows in M.
static std::vector<int> rref_exact(ExactMatrix& M) {
  std::vector<int> pivots;
  int rk = 0;
  for (int c = 0; c < M.cols() && rk < M.rows(); ++c) {
    int piv = -1;
    for (int r = rk; r < M.rows(); ++r)
      if (M.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < M.cols(); ++j) std::swap(M.at(piv, j), M.at(rk, j));
    Rational iv = 1 / M.at(rk, c);
    for (int j = c; j < M.cols(); ++j) M.at(rk, j) *= iv;
    for (int r = 0; r < M.rows(); ++r) {
      if (r == rk || M.at(r, c) == 0) continue;
      Rational f = M.at(r, c);
      for (int j = c; j < M.cols(); ++j) M.at(r, j) -= f * M.at(rk, j);
    }
    pivots.push_back(c);
    ++rk;
  }
  return pivots;
}

int rank_exact(const ExactMatrix& M) {
  ExactMatrix C = M;
  return static_cast<int>(rref_exact(C).size());
}

int rank(const ExactMatrix& M, const ModularConfig& cfg) {
  if (M.empty()) throw std::invalid_argument("rank: empty matrix");
  if (cfg.force_exact) return rank_exact(M);
  std::vector<int> ranks;
  int fresh = 0;
  for (std::uint64_t p : cfg.primes) {
    ModMatrix mm(0, 0, p);
    while (!reduce_mod(M, p, mm)) {
      p = cfg.fresh_prime(fresh++);
      if (fresh > 64) return rank_exact(M);
    }
    ranks.push_back(mm.rank());
  }
  bool agree = std::all_of(ranks.begin(), ranks.end(),
                           [&](int r) { return r == ranks[0]; });
  if (agree) return ranks[0];
  return rank_exact(M);
}

std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix& M,
                                               const ModularConfig& cfg) {
  if (M.empty()) throw std::invalid_argument("kernel_basis: empty matrix");
  (void)cfg; // the kernel is always certified exactly
  ExactMatrix R = M;
  std::vector<int> pivots = rref_exact(R);
  std::vector<int> pivot_of_col(M.cols(), -1);
  for (int i = 0; i < static_cast<int>(pivots.size()); ++i)
    pivot_of_col[pivots[i]] = i;

  std::vector<std::vector<Integer>> basis;
  for (int c = 0; c < M.cols(); ++c) {
    if (pivot_of_col[c] >= 0) continue;
    std::vector<Rational> v(M.cols(), Rational(0));
    v[c] = 1;
    for (int j = 0; j < M.cols(); ++j) {
      int pr = pivot_of_col[j];
      if (pr >= 0) v[j] = -R.at(pr, c);
    }
    // clear to a primitive integer vector
    Integer lcm = 1;
    for (const Rational& q : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                        q.get_den().get_mpz_t());
    std::vector<Integer> w(M.cols());
    Integer g = 0;
    for (int j = 0; j < M.cols(); ++j) {
      Rational s = v[j] * Rational(lcm);
      w[j] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[j].get_mpz_t());
    }
    if (g != 0)
      for (auto& x : w) x /= g;
    for (const Integer& x : w) {
      if (x == 0) continue;
      if (x < 0)
        for (auto& y : w) y = -y;
      break;
    }
    // exact verification M w = 0
    for (int r = 0; r < M.rows(); ++r) {
      Rational acc = 0;
      for (int j = 0; j < M.cols(); ++j)
        if (w[j] != 0) acc += M.at(r, j) * Rational(w[j]);
      if (acc != 0) throw std::logic_error("kernel_basis: residual nonzero");
    }
    basis.push_back(std::move(w));
  }
  return basis;
}

RowReduceResult row_reduce_ordered(const ExactMatrix& M,
                                   std::span<const int> column_order,
                                   const ModularConfig& cfg) {
  (void)cfg;
  if (static_cast<int>(column_order.size()) != M.cols())
    throw std::invalid_argument("row_reduce_ordered: bad permutation size");
  std::vector<bool> seen(M.cols(), false);
  for (int c : column_order) {
    if (c < 0 || c >= M.cols() || seen[c])
      throw std::invalid_argument("row_reduce_ordered: not a permutation");
    seen[c] = true;
  }
  ExactMatrix R = M;
  RowReduceResult res;
  int rk = 0;
  for (int c : column_order) {
    if (rk >= R.rows()) break;
    int piv = -1;
    for (int r = rk; r < R.rows(); ++r)
      if (R.at(r, c) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != rk)
      for (int j = 0; j < R.cols(); ++j) std::swap(R.at(piv, j), R.at(rk, j));
    Rational iv = 1 / R.at(rk, c);
    for (int j = 0; j < R.cols(); ++j) R.at(rk, j) *= iv;
    for (int r = 0; r < R.rows(); ++r) {
      if (r == rk || R.at(r, c) == 0) continue;
      Rational f = R.at(r, c);
      for (int j = 0; j < R.cols(); ++j) R.at(r, j) -= f * R.at(rk, j);
    }
    res.pivot_cols.push_back(c);
    ++rk;
  }
  for (int r = 0; r < rk; ++r) {
    std::vector<Rational> row(R.cols());
    for (int j = 0; j < R.cols(); ++j) row[j] = R.at(r, j);
    res.reduced_rows.push_back(std::move(row));
  }
  return res;
}

} // namespace hepticheck
