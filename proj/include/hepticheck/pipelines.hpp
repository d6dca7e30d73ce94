#ifndef HEPTICHECK_PIPELINES_HPP
#define HEPTICHECK_PIPELINES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hepticheck/curve.hpp"
#include "hepticheck/exact.hpp"
#include "hepticheck/report.hpp"

namespace hepticheck {

struct PipelineConfig {
  std::uint64_t seed = 0;
  int prime_count = 2;
  bool force_exact = false;
  int truncation = 16;
  int max_depth = 16;
  // empty strings fall back to the embedded data files
  std::string syzygy_text;
  std::string curve_text;
  std::string catalog_text;

  ModularConfig modular() const;
};

/// Curve certificate: syzygy-variant adoption, solved kernel vector, match
/// report, Hilbert-function genus, initial ideal, i = 0 verdict.
struct CurveCertificate {
  std::vector<Section> sections;
  std::string adopted_variant;
  bool i_zero = false;
  int initial_max_degree = -1;
};

/// P^5 chain: dimension count, genus bound, obstructed strata, residue case.
std::vector<Section> run_p5();

/// P^4 chain: genus bound, minimal obstruction, i = 0 certificate,
/// weakened threshold, singular-locus residue. Pass the certificate from
/// run_curve_certificate; a null pointer marks that branch inconclusive.
std::vector<Section> run_p4(const PipelineConfig& cfg,
                            const CurveCertificate* cert);

/// P^3 chain: genus bound, lambda-sequence dichotomy, forced rewritings,
/// final bound.
std::vector<Section> run_p3(const PipelineConfig& cfg);

CurveCertificate run_curve_certificate(const PipelineConfig& cfg);

/// Singularity catalog audit plus ramification and quadruple-point checks.
std::vector<Section> run_delta_audit(const PipelineConfig& cfg);

/// Full run: all pipelines, aggregated in fixed order, warning manifest
/// applied, metadata filled in.
VerdictReport run_all(const PipelineConfig& cfg);

} // namespace hepticheck

#endif
