#ifndef HEPTICHECK_MONOMIAL_HPP
#define HEPTICHECK_MONOMIAL_HPP

#include <functional>
#include <string>
#include <vector>

namespace hepticheck {

/// Monomial in variables x_0..x_{n-1}, stored as an exponent vector.
struct Monomial {
  std::vector<int> e;

  Monomial() = default;
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  int num_vars() const { return static_cast<int>(e.size()); }
  int degree() const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// Borel move: replaces one factor x_j by x_i (requires i < j, e[j] > 0).
  Monomial swap_down(int i, int j) const;

  /// Same exponents viewed in a larger variable set.
  Monomial extended(int num_vars) const;

  bool operator==(const Monomial&) const = default;
  std::string str() const;
};

enum class MonomialOrder { GrevLex, GrLex };

/// Three-way comparison: -1 if a < b, 0 if equal, +1 if a > b.
/// Both orders refine total degree. At equal degree grevlex prefers the
/// monomial whose LAST differing exponent is smaller.
int compare(const Monomial& a, const Monomial& b, MonomialOrder ord);

/// Monomial ideal held by its unique minimal generating set.
struct MonomialIdeal {
  int num_vars = 0;
  std::vector<Monomial> gens; // minimal, sorted for canonical form

  bool contains(const Monomial& m) const;
  bool is_zero() const { return gens.empty(); }
  int max_gen_degree() const;
  MonomialIdeal extended(int num_vars) const;
  bool operator==(const MonomialIdeal&) const = default;
  std::string str() const;
};

/// Removes divisibility-redundant generators and canonically sorts.
MonomialIdeal minimalize(int num_vars, std::vector<Monomial> gens);

/// Borel-fixedness test on the minimal generators (swap closure).
bool is_borel_fixed(const MonomialIdeal& I);

/// Brute-force Borel check over all ideal monomials up to the given degree.
bool is_borel_fixed_bruteforce(const MonomialIdeal& I, int up_to_degree);

/// Saturation criterion for Borel-fixed ideals: no minimal generator is
/// divisible by the last variable. The criterion is only meaningful for
/// Borel-fixed ideals; callers check is_borel_fixed separately.
bool is_saturated(const MonomialIdeal& I);

enum class Side { Ideal, Quotient };

/// Number of degree-m monomials inside (Side::Ideal) or outside
/// (Side::Quotient) the ideal.
long hilbert_count(const MonomialIdeal& I, int m, Side side);

/// Castelnuovo-Mumford regularity of a saturated Borel-fixed ideal:
/// the maximum degree of a minimal generator. Refuses otherwise.
int regularity_saturated_borel(const MonomialIdeal& I);

/// Visits every degree-m monomial in num_vars variables.
void for_each_monomial(int num_vars, int m,
                       const std::function<void(const Monomial&)>& fn);

/// All degree-m monomials sorted descending in the given order.
std::vector<Monomial> monomials_of_degree(int num_vars, int m,
                                          MonomialOrder ord);

long binomial(long n, long k);

} // namespace hepticheck

#endif
