#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hepticheck/pipelines.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const hepticheck::VerdictReport& rep, const std::string& path,
         const std::string& format) {
  std::string text = format == "json" ? rep.render_json() : rep.render_text();
  if (path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(path);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 3;
    }
    out << text;
  }
  return rep.exit_code();
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"hepticheck: re-verifies the degree-16 rational-curve exclusion"};
  app.require_subcommand(1);

  hepticheck::PipelineConfig cfg;
  std::string report_path, format = "text";
  std::string syzygy_path, curve_path, catalog_path;

  app.add_option("--seed", cfg.seed, "seed for the modular prime stream");
  app.add_option("--primes", cfg.prime_count, "number of modular primes")
      ->check(CLI::Range(1, 8));
  app.add_flag("--exact", cfg.force_exact, "force exact rational arithmetic");
  app.add_option("--truncation", cfg.truncation, "power-series truncation order")
      ->check(CLI::Range(4, 64));
  app.add_option("--max-depth", cfg.max_depth, "rewriting search depth cap")
      ->check(CLI::Range(1, 64));
  app.add_option("--report", report_path, "write the report to this path");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--syzygies", syzygy_path, "syzygy data file");
  app.add_option("--curve", curve_path, "printed-solution data file");
  app.add_option("--catalog", catalog_path, "singularity catalog file");

  auto* p5 = app.add_subcommand("verify-p5", "P^5 pipeline");
  auto* p4 = app.add_subcommand("verify-p4", "P^4 pipeline");
  auto* p3 = app.add_subcommand("verify-p3", "P^3 pipeline");
  auto* cc = app.add_subcommand("curve-cert", "explicit curve certificate");
  auto* da = app.add_subcommand("delta-audit", "singularity catalog audit");
  auto* all = app.add_subcommand("all", "run everything");
  for (auto* sub : {p5, p4, p3, cc, da, all}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 3;
  }

  try {
    if (!syzygy_path.empty()) cfg.syzygy_text = slurp(syzygy_path);
    if (!curve_path.empty()) cfg.curve_text = slurp(curve_path);
    if (!catalog_path.empty()) cfg.catalog_text = slurp(catalog_path);

    hepticheck::VerdictReport rep;
    auto mod = cfg.modular();
    rep.meta.seed = cfg.seed;
    rep.meta.primes = mod.primes;
    rep.meta.truncation = cfg.truncation;
    rep.meta.max_depth = cfg.max_depth;
    rep.meta.exact_only = cfg.force_exact;

    if (all->parsed()) {
      rep = hepticheck::run_all(cfg);
    } else if (p5->parsed()) {
      rep.append(hepticheck::run_p5());
    } else if (p4->parsed()) {
      auto cert = hepticheck::run_curve_certificate(cfg);
      rep.append(hepticheck::run_p4(cfg, &cert));
    } else if (p3->parsed()) {
      rep.append(hepticheck::run_p3(cfg));
    } else if (cc->parsed()) {
      rep.append(hepticheck::run_curve_certificate(cfg).sections);
    } else if (da->parsed()) {
      rep.append(hepticheck::run_delta_audit(cfg));
    }
    hepticheck::apply_warning_manifest(rep.sections);
    return emit(rep, report_path, format);
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::runtime_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
