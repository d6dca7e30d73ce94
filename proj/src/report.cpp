#include "hepticheck/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace hepticheck {

std::string to_string(SectionStatus s) {
  switch (s) {
    case SectionStatus::Match: return "match";
    case SectionStatus::Mismatch: return "mismatch";
    case SectionStatus::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

void VerdictReport::append(const std::vector<Section>& more) {
  sections.insert(sections.end(), more.begin(), more.end());
}

int VerdictReport::hard_mismatches() const {
  int n = 0;
  for (const auto& s : sections)
    if (s.status == SectionStatus::Mismatch && !s.warning_only) ++n;
  return n;
}

int VerdictReport::warnings() const {
  int n = 0;
  for (const auto& s : sections)
    if (s.status == SectionStatus::Mismatch && s.warning_only) ++n;
  return n;
}

int VerdictReport::exit_code() const {
  if (hard_mismatches() > 0) return 1;
  for (const auto& s : sections)
    if (s.status == SectionStatus::Inconclusive && !s.warning_only) return 2;
  return 0;
}

std::string VerdictReport::render_text() const {
  std::ostringstream out;
  out << "hepticheck verdict report (v" << meta.version << ")\n";
  out << "seed=" << meta.seed << " primes=[";
  for (size_t i = 0; i < meta.primes.size(); ++i)
    out << (i ? "," : "") << meta.primes[i];
  out << "] truncation=" << meta.truncation << " max_depth=" << meta.max_depth
      << " exact=" << (meta.exact_only ? "yes" : "no") << "\n\n";
  for (const auto& s : sections) {
    std::string tag = to_string(s.status);
    if (s.status == SectionStatus::Mismatch && s.warning_only) tag = "mismatch (warning)";
    out << "[" << tag << "] " << s.id << ": " << s.claim << "\n";
    out << "    expected " << s.paper_value << " (" << s.provenance
        << "), computed " << s.computed_value << "\n";
    if (!s.evidence.empty()) out << "    evidence: " << s.evidence << "\n";
  }
  out << "\n" << sections.size() << " sections, " << hard_mismatches()
      << " failures, " << warnings() << " warnings\n";
  return out.str();
}

std::string VerdictReport::render_json() const {
  nlohmann::ordered_json j;
  j["version"] = meta.version;
  j["seed"] = meta.seed;
  j["primes"] = meta.primes;
  j["truncation"] = meta.truncation;
  j["max_depth"] = meta.max_depth;
  j["exact"] = meta.exact_only;
  j["sections"] = nlohmann::ordered_json::array();
  for (const auto& s : sections) {
    nlohmann::ordered_json js;
    js["id"] = s.id;
    js["claim"] = s.claim;
    js["paper_value"] = s.paper_value;
    js["computed_value"] = s.computed_value;
    js["status"] = to_string(s.status);
    js["provenance"] = s.provenance;
    js["evidence"] = s.evidence;
    js["warning_only"] = s.warning_only;
    j["sections"].push_back(std::move(js));
  }
  j["failures"] = hard_mismatches();
  j["warnings"] = warnings();
  j["exit_code"] = exit_code();
  return j.dump(2) + "\n";
}

const std::vector<std::string>& warning_only_ids() {
  // The first three are the known open discrepancies between the printed
  // values and recomputation; the last two are comparisons the pipelines
  // report without asserting (printed data may contain transcription typos).
  static const std::vector<std::string> ids = {
      "lambda-k3max",
      "delta-t3t5",
      "ramification-alt-formula",
      "min-rewritings",
      "printed-curve-match",
  };
  return ids;
}

void apply_warning_manifest(std::vector<Section>& sections) {
  const auto& ids = warning_only_ids();
  for (auto& s : sections)
    if (std::find(ids.begin(), ids.end(), s.id) != ids.end())
      s.warning_only = true;
}

} // namespace hepticheck
