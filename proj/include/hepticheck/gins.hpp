#ifndef HEPTICHECK_GINS_HPP
#define HEPTICHECK_GINS_HPP

#include <vector>

#include "hepticheck/monomial.hpp"

namespace hepticheck {

/// Numerical character (k; lambda_0..lambda_{k-1}) of the gin of a general
/// hyperplane section of 16 points in the plane.
///
/// Invariants enforced by validate(), for point degree `degree`:
///   lambda_j >= 1, sum lambda_j = degree,
///   lambda_{j+1} <= lambda_j - 1   (Borel-fixedness of the induced ideal),
///   lambda_j - 2 <= lambda_{j+1}   (Gruson-Peskine lower bound),
///   j + lambda_j <= 9 and k <= 9   (9-regularity),
///   k >= 2                          (points span the plane).
///
/// The index range is 0..k-1 throughout: only that choice reproduces
/// deg = 16 and the genus value 49 for the sequence (9,7).
struct LambdaSequence {
  std::vector<int> lambda;

  int k() const { return static_cast<int>(lambda.size()); }
  int degree() const;
  void validate(int degree = 16, int regularity = 9) const;
};

/// The monomial ideal (x0^k, x0^{k-1} x1^{l_{k-1}}, ..., x0 x1^{l_1},
/// x1^{l_0}) in three variables; Borel-fixed and saturated by construction.
MonomialIdeal to_ideal(const LambdaSequence& s);

struct GLambdaResult {
  long value;          // genus of the cone over the points
  long h0_direct;      // degree-m monomial count of the cone ideal in 4 vars
  long h0_closed_tail; // C(m+3-k,3) + sum C(m+2-(j+lambda_j), 2)
};

/// Cone genus: degree*m + 1 - C(m+3,3) + h0, where h0 is evaluated both by
/// the closed form and by a direct monomial count; a mismatch between the
/// two routes is a hard error.
GLambdaResult g_lambda(const LambdaSequence& s, int m = 9, int degree = 16);

struct GinReport {
  LambdaSequence sequence;
  MonomialIdeal ideal;
  long g_lambda;
  long h0_at_9;
};

/// All admissible sequences for the given point degree, sorted descending
/// by cone genus (ties broken by k then lexicographically).
std::vector<GinReport> enumerate_sequences(int degree = 16);

} // namespace hepticheck

#endif
