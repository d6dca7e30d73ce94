#ifndef HEPTICHECK_EXACT_HPP
#define HEPTICHECK_EXACT_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace hepticheck {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix over Q. Dimensions are fixed at construction.
class ExactMatrix {
public:
  ExactMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
    if (rows < 0 || cols < 0)
      throw std::invalid_argument("ExactMatrix: negative dimensions");
  }

  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Primes for the modular fast path plus the seed that produced them.
/// All primes are distinct and exceed 2^30.
struct ModularConfig {
  std::vector<std::uint64_t> primes;
  std::uint64_t seed = 0;
  bool force_exact = false;

  /// Deterministically derives `count` primes from `seed`.
  static ModularConfig make(std::uint64_t seed, int count = 2);

  /// Replacement prime stream for matrices whose denominators hit a prime.
  std::uint64_t fresh_prime(int index) const;
};

// --- word-size prime-field helpers ---------------------------------------

namespace fp {
std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
} // namespace fp

/// Dense matrix over F_p used by the modular fast paths.
class ModMatrix {
public:
  ModMatrix(int rows, int cols, std::uint64_t p)
      : rows_(rows), cols_(cols), p_(p),
        a_(static_cast<size_t>(rows) * cols, 0) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t prime() const { return p_; }
  std::uint64_t& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  std::uint64_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  int rank() const;
  /// Right kernel basis, one vector per row of the result.
  std::vector<std::vector<std::uint64_t>> kernel_basis() const;
  /// Pivot columns of Gaussian elimination following column_order.
  std::vector<int> pivot_columns(std::span<const int> column_order) const;

private:
  int rows_, cols_;
  std::uint64_t p_;
  std::vector<std::uint64_t> a_;
};

/// Reduces M modulo p. Fails (returns false) if a denominator vanishes mod p.
bool reduce_mod(const ExactMatrix& M, std::uint64_t p, ModMatrix& out);

/// Rank over Q. Computed at the configured primes; on disagreement the
/// result comes from exact rational elimination.
int rank(const ExactMatrix& M, const ModularConfig& cfg);

/// Exact rational rank (always full elimination).
int rank_exact(const ExactMatrix& M);

/// Basis of the right kernel over Q. Each vector is cleared to a primitive
/// integer vector: coprime entries, first nonzero entry positive.
/// Every returned vector is verified to satisfy M v = 0 exactly.
std::vector<std::vector<Integer>> kernel_basis(const ExactMatrix& M,
                                               const ModularConfig& cfg);

struct RowReduceResult {
  std::vector<int> pivot_cols;
  std::vector<std::vector<Rational>> reduced_rows;
};

/// Gaussian elimination with pivot search following column_order.
RowReduceResult row_reduce_ordered(const ExactMatrix& M,
                                   std::span<const int> column_order,
                                   const ModularConfig& cfg);

} // namespace hepticheck

#endif
