#ifndef HEPTICHECK_BOUNDS_HPP
#define HEPTICHECK_BOUNDS_HPP

#include <vector>

namespace hepticheck {

/// Splitting type of the twisted restricted tangent bundle: weakly
/// decreasing positive tuple (a_1..a_n) with sum d.
struct SplittingType {
  std::vector<int> a;

  int degree() const;
  int parts() const { return static_cast<int>(a.size()); }
  void validate() const; // weakly decreasing, each part >= 1
};

struct CurveClass {
  int n; // ambient projective dimension
  int d; // degree
  int g; // arithmetic genus
  int i; // h^1 of the twisted ideal sheaf
};

struct AmbientConfig {
  int hypersurface_degree = 7;
  int curve_degree = 16;
  /// Dimension of the projective space of degree-7 hypersurfaces in P^5,
  /// computed from the binomial count.
  long N() const;
};

/// Castelnuovo genus bound for irreducible nondegenerate curves of degree d
/// in P^n: C(m,2)(n-1) + m*eps with m = floor((d-1)/(n-1)).
long castelnuovo_bound(int d, int n);

/// Codimension of the splitting stratum: sum over ordered pairs i != j with
/// a_i >= a_j of max(0, a_i - a_j - 1). Permutation invariant.
long stratum_codim(const SplittingType& s);

/// Regularity criterion: the image curve is `bound`-regular whenever
/// a_i + a_j <= bound for all pairs, i.e. a_1 + a_2 <= bound once sorted.
bool glp_regular(const SplittingType& s, int bound = 8);

struct ObstructedStratum {
  SplittingType type;
  long codim;
};

/// All weakly decreasing positive tuples summing to d whose top two parts
/// reach the threshold, each with its codimension, sorted by codimension.
std::vector<ObstructedStratum> enumerate_obstructed_strata(int d, int n,
                                                           int threshold = 9);

struct IncidenceDimension {
  long dimension; // N + 1 - d + g + i
  bool dominance_excluded; // true iff g + i <= d - 2
};

IncidenceDimension incidence_dimension(const AmbientConfig& cfg,
                                       const CurveClass& c);

/// Required estimate on g+i per ambient dimension: n=5 -> 14+codim,
/// n=4 -> 28+codim, n=3 -> 42.
long required_estimate(int n, long codim);

} // namespace hepticheck

#endif
