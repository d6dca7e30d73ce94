#ifndef HEPTICHECK_CURVE_HPP
#define HEPTICHECK_CURVE_HPP

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hepticheck/exact.hpp"
#include "hepticheck/monomial.hpp"

namespace hepticheck {

/// Binary form of fixed degree in (t, u): c[j] is the coefficient of
/// t^{degree-j} u^j.
struct BiForm {
  int degree = 0;
  std::vector<Integer> c;

  static BiForm zero(int degree) { return {degree, std::vector<Integer>(degree + 1)}; }
  bool is_zero() const;
};

BiForm mul(const BiForm& a, const BiForm& b);

/// One syzygy: five coefficient forms of a common degree.
struct SyzygyRow {
  int degree = 0;
  std::array<BiForm, 5> g;
};

/// Four syzygies of degrees (5,4,4,3).
struct SyzygySpec {
  std::vector<SyzygyRow> rows;
  void validate() const;
};

/// Degree-16 parameterization (f_0..f_4) of a rational curve in P^4.
struct ParamCurve {
  std::array<BiForm, 5> f;
};

/// Parses the syzygy data file: one or more named variants, each four rows.
/// Format: "variant NAME" / "row DEGREE" / five "g c0 .. c_deg" lines.
std::map<std::string, SyzygySpec> parse_syzygy_file(std::istream& in);

/// Parses a printed-solution file: five lines of 17 integers (a_{i,0..16}).
ParamCurve parse_curve_file(std::istream& in);

/// The (22+21+21+20) x 85 matrix expressing the syzygies coefficient-wise,
/// unknowns a_{i,j} ordered lexicographically by (i, j).
ExactMatrix assemble_system(const SyzygySpec& s);

struct CurveSolution {
  ParamCurve curve;
  int rank;
  int kernel_dim;
};

/// Solves the syzygy system: requires rank 84 / kernel dimension 1; the
/// primitive kernel vector is reshaped into the five forms and the syzygy
/// residuals are verified to vanish identically in exact arithmetic.
CurveSolution solve_curve(const SyzygySpec& s, const ModularConfig& cfg);

BiForm syzygy_residual(const SyzygyRow& row, const ParamCurve& c);

struct CoefficientDiff {
  int i, j;
  Integer expected; // printed value
  Rational got;     // solved value after global rescaling
};

struct MatchReport {
  int matches = 0;
  int total = 85;
  Rational scale = 0; // solved * scale compared against printed
  std::vector<CoefficientDiff> diffs;
};

/// Per-coefficient comparison up to one global rational scalar.
MatchReport match_printed(const ParamCurve& solved, const ParamCurve& printed);

struct SliceResult {
  int m;
  int kernel_dim;
  bool exact; // true when the exact path was used
};

/// Dimension of the degree-m graded piece of the ideal of the image curve,
/// via the kernel of the substitution matrix monomial -> form in (t,u).
/// Modular with multi-prime agreement; escalates to exact on disagreement.
SliceResult ideal_slice(const ParamCurve& c, int m, const ModularConfig& cfg);

/// Exact-rational variant (slow above m = 4; used for spot checks).
int ideal_slice_dim_exact(const ParamCurve& c, int m);

/// Initial ideal of the image up to the given degree: per degree, the
/// kernel basis is row-reduced with pivot search descending in `ord`; the
/// pivot monomials not already generated below give the new generators.
MonomialIdeal initial_ideal(const ParamCurve& c, int up_to, MonomialOrder ord,
                            const ModularConfig& cfg);

struct IZeroVerdict {
  enum class Status { IZero, Withheld, Inconclusive };
  Status status = Status::Inconclusive;
  int regularity = -1;
  bool borel_fixed = false;
  bool saturated = false;
  int coordinate_retries = 0;
  MonomialIdeal ideal; // the initial ideal the verdict rests on
};

/// i = 0 verdict: needs a Borel-fixed saturated initial ideal of regularity
/// at most 8. If Borel-fixedness fails, retries after random integer
/// coordinate changes (entries in [-5,5], at most 3 attempts, seeded).
IZeroVerdict conclude_i_zero(const ParamCurve& c, const MonomialIdeal& I,
                             const ModularConfig& cfg);

/// Ambient linear coordinate change: replaces the parameterization forms by
/// the invertible integer combinations f_i' = sum_j A[i][j] f_j.
ParamCurve change_coordinates(const ParamCurve& c,
                              const std::vector<std::vector<int>>& A);

/// The printed 29-generator initial ideal (5 variables).
MonomialIdeal printed_initial_ideal();

} // namespace hepticheck

#endif
