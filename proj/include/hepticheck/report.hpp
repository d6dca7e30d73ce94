#ifndef HEPTICHECK_REPORT_HPP
#define HEPTICHECK_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hepticheck {

enum class SectionStatus { Match, Mismatch, Inconclusive };

std::string to_string(SectionStatus s);

/// One verdict line: a printed claim, its recomputed value, and whether
/// the two agree. `provenance` records where the reference value comes from
/// ("paper" for transcribed values, "derived" for independently computed
/// ones). `warning_only` marks known report-only discrepancies that must
/// not fail the run.
struct Section {
  std::string id;
  std::string claim;
  std::string paper_value;
  std::string computed_value;
  SectionStatus status = SectionStatus::Inconclusive;
  std::string provenance = "derived";
  std::string evidence;
  bool warning_only = false;
};

struct ReportMetadata {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes;
  int truncation = 16;
  int max_depth = 16;
  bool exact_only = false;
  std::string version = "0.1.0";
};

struct VerdictReport {
  ReportMetadata meta;
  std::vector<Section> sections;

  void add(Section s) { sections.push_back(std::move(s)); }
  void append(const std::vector<Section>& more);

  /// Non-warning mismatch count. The process exits 0 iff this is zero.
  int hard_mismatches() const;
  int warnings() const;
  /// 0: verified; 1: a load-bearing claim failed recomputation;
  /// 2: a section is inconclusive; 3: bad input (raised before assembly).
  int exit_code() const;

  std::string render_text() const;
  std::string render_json() const;
};

/// Report-only discrepancy ids: recomputation is expected to disagree with
/// the printed value here, so mismatches downgrade to warnings.
const std::vector<std::string>& warning_only_ids();

/// Applies warning_only_ids to a section list in place.
void apply_warning_manifest(std::vector<Section>& sections);

} // namespace hepticheck

#endif
