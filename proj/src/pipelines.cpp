#include "hepticheck/pipelines.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "hepticheck/bounds.hpp"
#include "hepticheck/builtin_data.hpp"
#include "hepticheck/gins.hpp"
#include "hepticheck/rewriting.hpp"
#include "hepticheck/singularity.hpp"

namespace hepticheck {

ModularConfig PipelineConfig::modular() const {
  auto m = ModularConfig::make(seed, prime_count);
  m.force_exact = force_exact;
  return m;
}

namespace {

Section sec(std::string id, std::string claim, std::string paper,
            std::string computed, SectionStatus st,
            std::string provenance = "paper", std::string evidence = "") {
  Section s;
  s.id = std::move(id);
  s.claim = std::move(claim);
  s.paper_value = std::move(paper);
  s.computed_value = std::move(computed);
  s.status = st;
  s.provenance = std::move(provenance);
  s.evidence = std::move(evidence);
  return s;
}

SectionStatus eq(long a, long b) {
  return a == b ? SectionStatus::Match : SectionStatus::Mismatch;
}

std::string join_type(const SplittingType& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.a.size(); ++i)
    s += (i ? "," : "") + std::to_string(t.a[i]);
  return s + ")";
}

} // namespace

std::vector<Section> run_p5() {
  std::vector<Section> out;
  AmbientConfig acfg;

  long N = acfg.N();
  out.push_back(sec("p5-ambient-dim", "dimension of the space of heptic fourfolds",
                    "791", std::to_string(N), eq(N, 791)));

  long cast = castelnuovo_bound(16, 5);
  out.push_back(sec("p5-castelnuovo", "Castelnuovo bound for degree 16 in P^5",
                    "21", std::to_string(cast), eq(cast, 21)));

  auto strata = enumerate_obstructed_strata(16, 5, 9);
  long min_codim = strata.empty() ? -1 : strata.front().codim;
  std::string min_type = strata.empty() ? "-" : join_type(strata.front().type);
  out.push_back(sec("p5-strata-min-codim",
                    "minimal codimension among obstructed splitting strata",
                    "7 at (5,4,3,2,2)",
                    std::to_string(min_codim) + " at " + min_type,
                    eq(min_codim, 7)));

  bool all_ok = true;
  for (const auto& st : strata)
    if (cast > required_estimate(5, st.codim)) all_ok = false;
  out.push_back(sec("p5-stratum-check",
                    "genus bound <= 14 + codim on every obstructed stratum",
                    "holds for all strata", all_ok ? "holds for all strata" : "violated",
                    all_ok ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived",
                    std::to_string(strata.size()) + " strata checked; tightest " +
                        std::to_string(cast) + " <= " +
                        std::to_string(required_estimate(5, min_codim))));

  long residue_cap = 14 + lemma_verdict(cast);
  bool residue_ok = true;
  for (long g = 15; g <= cast; ++g)
    if (g > 14 + lemma_verdict(g)) residue_ok = false;
  out.push_back(sec("p5-residue", "residue case 15 <= g <= 21 closed by the singular-locus lemma",
                    "21 <= 23", std::to_string(cast) + " <= " + std::to_string(residue_cap),
                    residue_ok ? SectionStatus::Match : SectionStatus::Mismatch, "derived",
                    "cap 14 + min(3g, 9)"));

  bool verdict = all_ok && residue_ok && cast == 21 && min_codim == 7;
  out.push_back(sec("p5-verdict",
                    "no nonlinear rational degree-16 curves on a general heptic, P^5 case",
                    "excluded", verdict ? "excluded" : "not established",
                    verdict ? SectionStatus::Match : SectionStatus::Inconclusive));
  return out;
}

std::vector<Section> run_p4(const PipelineConfig&, const CurveCertificate* cert) {
  std::vector<Section> out;

  long cast = castelnuovo_bound(16, 4);
  out.push_back(sec("p4-castelnuovo", "Castelnuovo bound for degree 16 in P^4",
                    "30", std::to_string(cast), eq(cast, 30)));

  auto strata = enumerate_obstructed_strata(16, 4, 9);
  long min_codim = strata.empty() ? -1 : strata.front().codim;
  std::string min_type = strata.empty() ? "-" : join_type(strata.front().type);
  out.push_back(sec("p4-strata-min-codim",
                    "minimal codimension among obstructed splitting strata",
                    "1 at (5,4,4,3)",
                    std::to_string(min_codim) + " at " + min_type,
                    eq(min_codim, 1)));

  if (cert != nullptr && cert->i_zero) {
    out.push_back(sec("p4-certificate",
                      "generic member has i = 0 (explicit curve certificate)",
                      "i = 0",
                      "i = 0 (initial ideal generated in degree <= " +
                          std::to_string(cert->initial_max_degree) + ")",
                      SectionStatus::Match, "derived",
                      "syzygy variant " + cert->adopted_variant));
  } else {
    out.push_back(sec("p4-certificate",
                      "generic member has i = 0 (explicit curve certificate)",
                      "i = 0", "certificate unavailable",
                      SectionStatus::Inconclusive, "derived"));
  }

  long threshold = required_estimate(4, 2);
  out.push_back(sec("p4-threshold", "weakened estimate g + i <= 28 + 2 suffices",
                    "30 <= 30",
                    std::to_string(cast) + " <= " + std::to_string(threshold),
                    cast <= threshold ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived"));

  out.push_back(sec("p4-residue",
                    "residue case 28 <= g <= 30 confined to a codimension-2 sublocus",
                    "codimension 2", "codimension 2 (see delta audit)",
                    SectionStatus::Match, "paper",
                    "singular-locus dimension count"));

  bool verdict = cast == 30 && min_codim == 1 && cast <= threshold &&
                 cert != nullptr && cert->i_zero;
  out.push_back(sec("p4-verdict",
                    "no nonlinear rational degree-16 curves on a general heptic, P^4 case",
                    "excluded", verdict ? "excluded" : "not established",
                    verdict ? SectionStatus::Match : SectionStatus::Inconclusive));
  return out;
}

std::vector<Section> run_p3(const PipelineConfig& cfg) {
  std::vector<Section> out;

  long cast = castelnuovo_bound(16, 3);
  out.push_back(sec("p3-castelnuovo", "Castelnuovo bound for degree 16 in P^3",
                    "49", std::to_string(cast), eq(cast, 49)));

  auto gins = enumerate_sequences(16);
  std::vector<const GinReport*> k2;
  long k3max = -1;
  std::string k3arg;
  for (const auto& g : gins) {
    if (g.sequence.k() == 2) k2.push_back(&g);
    else if (g.g_lambda > k3max) {
      k3max = g.g_lambda;
      k3arg = "(";
      for (size_t i = 0; i < g.sequence.lambda.size(); ++i)
        k3arg += (i ? "," : "") + std::to_string(g.sequence.lambda[i]);
      k3arg += ")";
    }
  }
  {
    std::string computed;
    SectionStatus st = SectionStatus::Mismatch;
    if (k2.size() == 1) {
      const auto& s = *k2.front();
      computed = "unique (" + std::to_string(s.sequence.lambda[0]) + "," +
                 std::to_string(s.sequence.lambda[1]) +
                 "), g = " + std::to_string(s.g_lambda) +
                 ", h0 = " + std::to_string(s.h0_at_9);
      if (s.sequence.lambda == std::vector<int>{9, 7} && s.g_lambda == 49)
        st = SectionStatus::Match;
    } else {
      computed = std::to_string(k2.size()) + " sequences with k = 2";
    }
    out.push_back(sec("p3-lambda-k2", "unique k = 2 sequence (9,7) with cone genus 49",
                      "(9,7), g = 49", computed, st));
  }
  out.push_back(sec("lambda-k3max",
                    "printed claim: cone genus <= 31 whenever k >= 3",
                    "<= 31",
                    "max " + std::to_string(k3max) + " at " + k3arg,
                    k3max <= 31 ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived",
                    std::to_string(gins.size()) + " sequences enumerated"));

  // the quadric cap forces the first rewriting immediately: 49 -> 48
  LambdaSequence s97{{9, 7}};
  MonomialIdeal start = to_ideal(s97);
  auto tree = GeneratorTree::from_ideal(start);
  auto bez = BezoutConstraints::defaults();
  bool quadric_forced = !bez.satisfied(start);
  Monomial x0sq{{2, 0, 0}};
  auto after_one = apply_rule(tree, x0sq, RewriteRule::PurePower);
  long after_bound = bound_after(after_one, cast);
  out.push_back(sec("p3-quadric-rewriting",
                    "no quadric contains the curve, so one rewriting drops the bound to 48",
                    "48", std::to_string(after_bound),
                    (quadric_forced && after_bound == 48) ? SectionStatus::Match
                                                          : SectionStatus::Mismatch,
                    "paper"));

  auto search = min_forced_rewritings(start, bez, 7, cfg.max_depth);
  {
    std::string computed;
    SectionStatus st;
    if (search.status == RewriteSearchResult::Status::Inconclusive) {
      computed = "inconclusive at depth " + std::to_string(cfg.max_depth);
      st = SectionStatus::Inconclusive;
    } else {
      computed = "minimum " + std::to_string(search.min_rewritings);
      st = eq(search.min_rewritings, 9);
    }
    out.push_back(sec("min-rewritings",
                      "printed count of forced sub-degree-7 rewritings",
                      "9", computed, st, "derived",
                      std::to_string(search.states_explored) + " states explored"));
  }

  long final_bound = cast - 9;
  out.push_back(sec("p3-final-bound", "final estimate 49 - 9 = 40 <= 42",
                    "40 <= 42",
                    std::to_string(final_bound) + " <= " +
                        std::to_string(required_estimate(3, 0)),
                    final_bound <= required_estimate(3, 0) ? SectionStatus::Match
                                                           : SectionStatus::Mismatch,
                    "paper"));

  bool verdict = cast == 49 && k2.size() == 1 && quadric_forced &&
                 final_bound <= required_estimate(3, 0);
  out.push_back(sec("p3-verdict",
                    "no rational degree-16 curves spanning P^3 on a general heptic",
                    "excluded", verdict ? "excluded" : "not established",
                    verdict ? SectionStatus::Match : SectionStatus::Inconclusive));
  return out;
}

CurveCertificate run_curve_certificate(const PipelineConfig& cfg) {
  CurveCertificate cert;
  auto& out = cert.sections;
  auto mod = cfg.modular();

  std::istringstream syz_in(cfg.syzygy_text.empty()
                                ? std::string(builtin::syzygy_file())
                                : cfg.syzygy_text);
  auto variants = parse_syzygy_file(syz_in);
  std::istringstream curve_in(cfg.curve_text.empty()
                                  ? std::string(builtin::printed_curve_file())
                                  : cfg.curve_text);
  ParamCurve printed = parse_curve_file(curve_in);

  // residual test of the printed solution against each variant
  std::map<std::string, std::vector<bool>> residual_zero;
  for (const auto& [name, spec] : variants) {
    std::vector<bool> rows;
    for (const auto& row : spec.rows)
      rows.push_back(syzygy_residual(row, printed).is_zero());
    residual_zero[name] = rows;
  }
  std::vector<std::string> clean;
  for (const auto& [name, rows] : residual_zero)
    if (std::all_of(rows.begin(), rows.end(), [](bool b) { return b; }))
      clean.push_back(name);

  // rank profile per variant; only a one-dimensional kernel is usable
  std::map<std::string, std::pair<int, int>> profile; // rank, kernel dim
  std::map<std::string, CurveSolution> solved;
  std::map<std::string, MatchReport> matches;
  for (const auto& [name, spec] : variants) {
    auto M = assemble_system(spec);
    int r = rank(M, mod);
    profile[name] = {r, M.cols() - r};
    if (M.cols() - r == 1) {
      auto sol = solve_curve(spec, mod);
      matches[name] = match_printed(sol.curve, printed);
      solved.emplace(name, std::move(sol));
    }
  }

  std::string adopted;
  if (solved.size() == 1) {
    adopted = solved.begin()->first;
  } else if (clean.size() == 1) {
    adopted = clean.front();
  } else if (!matches.empty()) {
    int best = -1;
    for (const auto& [name, m] : matches)
      if (m.matches > best) {
        best = m.matches;
        adopted = name;
      }
  }
  cert.adopted_variant = adopted;

  {
    std::ostringstream ev;
    for (const auto& [name, rows] : residual_zero) {
      ev << name << ": rank " << profile[name].first << ", kernel "
         << profile[name].second << ", printed solution residuals [";
      for (size_t i = 0; i < rows.size(); ++i)
        ev << (i ? "," : "") << (rows[i] ? "0" : "nonzero");
      ev << "]; ";
    }
    out.push_back(sec("curve-syzygy-variant",
                      "resolution of the ambiguous fourth-syzygy coefficient",
                      "one reading validates",
                      adopted.empty() ? "neither reading validated" : "adopted " + adopted,
                      adopted.empty() ? SectionStatus::Inconclusive : SectionStatus::Match,
                      "derived", ev.str()));
  }
  if (adopted.empty() || solved.find(adopted) == solved.end()) {
    out.push_back(sec("curve-rank", "the syzygy system has 84 independent relations",
                      "rank 84, kernel 1", "no usable variant",
                      SectionStatus::Inconclusive, "paper"));
    return cert;
  }

  const auto& sol = solved.at(adopted);
  out.push_back(sec("curve-rank", "the syzygy system has 84 independent relations",
                    "rank 84, kernel 1",
                    "rank " + std::to_string(sol.rank) + ", kernel " +
                        std::to_string(sol.kernel_dim),
                    (sol.rank == 84 && sol.kernel_dim == 1) ? SectionStatus::Match
                                                            : SectionStatus::Mismatch));

  bool resid_ok = true;
  for (const auto& row : variants.at(adopted).rows)
    if (!syzygy_residual(row, sol.curve).is_zero()) resid_ok = false;
  out.push_back(sec("curve-residuals",
                    "solved curve satisfies all four syzygies exactly",
                    "identically zero", resid_ok ? "identically zero" : "nonzero residual",
                    resid_ok ? SectionStatus::Match : SectionStatus::Mismatch, "derived"));

  const auto& mr = matches.at(adopted);
  out.push_back(sec("printed-curve-match",
                    "per-coefficient agreement with the 85 printed integers",
                    "85/85",
                    std::to_string(mr.matches) + "/" + std::to_string(mr.total),
                    mr.matches == mr.total ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived",
                    std::to_string(mr.diffs.size()) + " differing coefficients"));

  // Hilbert-function genus across m = 5..8
  long genus = -1;
  bool consistent = true;
  std::ostringstream slices;
  for (int m = 5; m <= 8; ++m) {
    auto sl = ideal_slice(sol.curve, m, mod);
    long quotient = binomial(m + 4, 4) - sl.kernel_dim;
    long g = 16L * m + 1 - quotient;
    slices << "m=" << m << ": h0(ideal)=" << sl.kernel_dim << " g=" << g << "; ";
    if (genus == -1) genus = g;
    else if (g != genus) consistent = false;
  }
  out.push_back(sec("curve-hilbert-genus",
                    "quotient Hilbert function is eventually 16m + 1 - g",
                    "one consistent g",
                    consistent ? "g = " + std::to_string(genus) : "inconsistent",
                    consistent ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived", slices.str()));

  // the printed 29 generators describe the printed curve's initial ideal
  MonomialIdeal printed_init_computed =
      initial_ideal(printed, 8, MonomialOrder::GrevLex, mod);
  MonomialIdeal printed_init = printed_initial_ideal();
  bool same_init = printed_init_computed.gens.size() == printed_init.gens.size();
  if (same_init)
    for (size_t i = 0; i < printed_init.gens.size(); ++i)
      if (printed_init_computed.gens[i].e != printed_init.gens[i].e)
        same_init = false;
  out.push_back(sec("curve-initial-ideal",
                    "initial ideal of the printed curve equals the 29 printed generators",
                    "29 generators",
                    std::to_string(printed_init_computed.gens.size()) +
                        (same_init ? " generators, identical" : " generators, differing"),
                    same_init ? SectionStatus::Match : SectionStatus::Mismatch,
                    "derived", printed_init_computed.str()));

  MonomialIdeal init = initial_ideal(sol.curve, 8, MonomialOrder::GrevLex, mod);
  auto verdict = conclude_i_zero(sol.curve, init, mod);
  cert.i_zero = verdict.status == IZeroVerdict::Status::IZero;
  cert.initial_max_degree = verdict.ideal.max_gen_degree();
  {
    std::string computed;
    SectionStatus st;
    switch (verdict.status) {
      case IZeroVerdict::Status::IZero:
        computed = "i = 0 (regularity " + std::to_string(verdict.regularity) + ")";
        st = SectionStatus::Match;
        break;
      case IZeroVerdict::Status::Withheld:
        computed = "regularity " + std::to_string(verdict.regularity) + " > 8";
        st = SectionStatus::Mismatch;
        break;
      default:
        computed = "inconclusive (initial ideal not Borel-fixed or not saturated)";
        st = SectionStatus::Inconclusive;
    }
    out.push_back(sec("curve-izero", "regularity of the initial ideal certifies i = 0",
                      "i = 0", computed, st, "derived",
                      "coordinate retries: " + std::to_string(verdict.coordinate_retries)));
  }
  return cert;
}

std::vector<Section> run_delta_audit(const PipelineConfig& cfg) {
  std::vector<Section> out;

  std::istringstream cat_in(cfg.catalog_text.empty()
                                ? std::string(builtin::singularity_catalog_file())
                                : cfg.catalog_text);
  auto catalog = parse_catalog_file(cat_in);
  auto audit = catalog_audit(catalog, cfg.truncation);
  for (const auto& line : audit) {
    std::string id =
        line.name == "monomial-t3t5" ? "delta-t3t5" : "delta-" + line.name;
    std::string ev;
    if (line.semigroup_check >= 0)
      ev = "semigroup oracle: " + std::to_string(line.semigroup_check);
    out.push_back(sec(id, "delta invariant of " + line.name,
                      std::to_string(line.expected), std::to_string(line.computed),
                      line.match ? SectionStatus::Match : SectionStatus::Mismatch,
                      "paper", ev));
  }

  // pairwise identity delta(Ci u Cj) = delta_i + delta_j + e(Ci, Cj)
  {
    int pairs = 0, ok = 0;
    for (const auto& rec : catalog) {
      const auto& br = rec.param.branches;
      for (size_t i = 0; i < br.size(); ++i)
        for (size_t j = i + 1; j < br.size(); ++j) {
          BranchParam pi{{br[i]}}, pj{{br[j]}}, pij{{br[i], br[j]}};
          int di = delta_invariant(pi, cfg.truncation);
          int dj = delta_invariant(pj, cfg.truncation);
          int dij = delta_invariant(pij, cfg.truncation);
          int e = pair_intersection_multiplicity(br[i], br[j]);
          ++pairs;
          if (dij == di + dj + e) ++ok;
        }
    }
    out.push_back(sec("delta-pairwise-identity",
                      "two-branch deltas decompose as branch deltas plus intersection multiplicity",
                      "holds for all pairs",
                      std::to_string(ok) + "/" + std::to_string(pairs) + " pairs",
                      ok == pairs ? SectionStatus::Match : SectionStatus::Mismatch,
                      "derived"));
  }

  // ramification: linearized rank conditions vs the Schubert codimension
  {
    std::vector<RamificationType> samples = {
        {{2, 3, 5}}, {{3, 4, 6}}, {{1, 3, 4, 6}}, {{2, 4, 5, 7}}};
    int ok = 0;
    std::ostringstream ev;
    long alt_example = 0, codim_example = 0;
    for (const auto& rt : samples) {
      long formula = ramification_codim(rt);
      auto lin = linearized_rank_conditions(rt);
      if (lin.independent_conditions == formula && !lin.model_violation) ++ok;
      ev << "(";
      for (size_t i = 0; i < rt.r.size(); ++i) ev << (i ? "," : "") << rt.r[i];
      ev << "): formula " << formula << ", rank " << lin.independent_conditions << "; ";
      if (&rt == &samples.front()) {
        alt_example = ramification_codim_alt(rt);
        codim_example = formula;
      }
    }
    out.push_back(sec("ramification-rank",
                      "linearized truncation conditions are independent: rank = sum(r_i - i)",
                      "rank equals the formula",
                      std::to_string(ok) + "/" + std::to_string(samples.size()) +
                          " types agree",
                      ok == static_cast<int>(samples.size()) ? SectionStatus::Match
                                                             : SectionStatus::Mismatch,
                      "derived", ev.str()));
    out.push_back(sec("ramification-alt-formula",
                      "printed expression sum(r_i) - C(n,2) for the codimension",
                      std::to_string(alt_example) + " at (2,3,5)",
                      std::to_string(codim_example) + " (differs by n)",
                      eq(alt_example, codim_example), "derived"));
  }

  auto q = quadruple_point_codim();
  out.push_back(sec("quadruple-point-codim",
                    "quadruple points impose 20 fixed / 11 varied conditions",
                    "20 / 11",
                    std::to_string(q.fixed) + " / " + std::to_string(q.varied),
                    (q.fixed == 20 && q.varied == 11) ? SectionStatus::Match
                                                      : SectionStatus::Mismatch,
                    "derived"));

  long lemma = lemma_verdict(21);
  out.push_back(sec("lemma-verdict", "singular-locus codimension bound min(3g, 9) at g = 21",
                    "9", std::to_string(lemma), eq(lemma, 9), "derived"));
  return out;
}

VerdictReport run_all(const PipelineConfig& cfg) {
  VerdictReport rep;
  auto mod = cfg.modular();
  rep.meta.seed = cfg.seed;
  rep.meta.primes = mod.primes;
  rep.meta.truncation = cfg.truncation;
  rep.meta.max_depth = cfg.max_depth;
  rep.meta.exact_only = cfg.force_exact;

  auto f_p5 = std::async(std::launch::async, run_p5);
  auto f_p3 = std::async(std::launch::async, run_p3, cfg);
  auto f_delta = std::async(std::launch::async, run_delta_audit, cfg);
  CurveCertificate cert = run_curve_certificate(cfg);
  auto p4 = run_p4(cfg, &cert);

  rep.add(sec("plane-exclusion",
              "plane curves of degree 16 are precluded by the Bezout argument",
              "excluded", "excluded (no computation required)", SectionStatus::Match,
              "paper"));
  rep.append(f_p5.get());
  rep.append(p4);
  rep.append(f_p3.get());
  rep.append(cert.sections);
  rep.append(f_delta.get());
  apply_warning_manifest(rep.sections);
  return rep;
}

} // namespace hepticheck
