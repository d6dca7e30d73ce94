#ifndef HEPTICHECK_SINGULARITY_HPP
#define HEPTICHECK_SINGULARITY_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hepticheck/exact.hpp"

namespace hepticheck {

/// One branch of a curve singularity: r coordinate power series in its own
/// parameter, each stored as a sparse (exponent, coefficient) list.
struct Branch {
  std::vector<std::vector<std::pair<int, Integer>>> coords;

  int embedding_dim() const { return static_cast<int>(coords.size()); }
  /// Dense coefficient vector of one coordinate, truncated at order T.
  std::vector<Integer> dense_coord(int c, int T) const;
  bool coord_is_zero(int c) const;
};

struct BranchParam {
  std::vector<Branch> branches;

  int embedding_dim() const;
  int num_branches() const { return static_cast<int>(branches.size()); }
  void validate() const;
};

struct SingularityRecord {
  std::string name;
  int expected_delta = 0;
  int declared_branches = 0;
  BranchParam param;
};

/// Delta invariant: colength of the subring generated by the images of
/// 1, x_1..x_r inside prod_i C[[t_i]]/t_i^T. The subalgebra is spanned
/// degree by degree until the dimension stabilizes; the result must be
/// stable under T -> T+2 or the computation refuses.
int delta_invariant(const BranchParam& p, int T = 16);

/// Number of gaps of the numerical semigroup generated by the exponents
/// (independent oracle for monomial unibranch singularities).
int semigroup_delta(const std::vector<int>& exponents);

/// Intersection multiplicity of two branch germs: the colength of the ideal
/// generated by the pullbacks (via the first branch) of all polynomials of
/// degree <= D vanishing on the second branch, inside the first branch's
/// coordinate ring. Computed by truncated linear algebra, independently of
/// delta_invariant, and satisfies
///   delta(C_i u C_j) = delta(C_i) + delta(C_j) + e(C_i, C_j).
int pair_intersection_multiplicity(const Branch& b1, const Branch& b2,
                                   int max_poly_degree = 4, int T = 24);

struct AuditLine {
  std::string name;
  int expected;
  int computed;
  bool match;
  int semigroup_check = -1; // oracle value for monomial unibranch records
};

std::vector<AuditLine> catalog_audit(const std::vector<SingularityRecord>& catalog,
                                     int T = 16);

/// Parses the catalog file. Record format:
///   record NAME expected_delta num_branches
///   branch <coord>|<coord>|...   with coord = "0" or "e:c,e:c,..."
std::vector<SingularityRecord> parse_catalog_file(std::istream& in);

// --- ramification arithmetic ----------------------------------------------

/// Ramification type (r_1 <= ... <= r_n) of a unibranch singularity.
struct RamificationType {
  std::vector<int> r;
  void validate() const; // weakly increasing, r_1 >= 1
  int n() const { return static_cast<int>(r.size()); }
};

/// Schubert-cycle codimension sum(r_i - i).
long ramification_codim(const RamificationType& rt);

/// The alternative printed expression sum(r_i) - C(n,2); differs from
/// ramification_codim by n.
long ramification_codim_alt(const RamificationType& rt);

struct RankConditionResult {
  long independent_conditions; // rank of the linearized condition system
  bool model_violation; // a minor had a nonzero constant term
};

/// Linearizes the truncation rank conditions at the monomial model
/// psi_i = t^{r_i}/r_i! and returns the rank of the resulting linear system
/// in the deformation coefficients.
RankConditionResult linearized_rank_conditions(const RamificationType& rt);

struct QuadruplePointCodim {
  long fixed;  // rank * points vanishing conditions
  long varied; // fixed - point_moduli - target_dim
};

QuadruplePointCodim quadruple_point_codim(int rank = 5, int points = 4,
                                          int target_dim = 5,
                                          int point_moduli = 4);

/// Required codimension min(3g, 9) for the genus-g singular locus.
long lemma_verdict(long g);

} // namespace hepticheck

#endif
