#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hepticheck/bounds.hpp"
#include "hepticheck/builtin_data.hpp"
#include "hepticheck/gins.hpp"
#include "hepticheck/monomial.hpp"
#include "hepticheck/pipelines.hpp"
#include "hepticheck/rewriting.hpp"
#include "hepticheck/singularity.hpp"

namespace py = pybind11;
using namespace hepticheck;

PYBIND11_MODULE(_hepticheck, m) {
  m.doc() = "exact re-verification kernels for the degree-16 exclusion";

  m.def("castelnuovo_bound", &castelnuovo_bound, py::arg("degree"), py::arg("ambient"));
  m.def("required_estimate", &required_estimate, py::arg("ambient"), py::arg("codim"));
  m.def(
      "stratum_codim",
      [](const std::vector<int>& a) { return stratum_codim(SplittingType{a}); },
      py::arg("type"));
  m.def(
      "enumerate_obstructed_strata",
      [](int degree, int parts, int pair_min) {
        std::vector<std::pair<std::vector<int>, long>> out;
        for (const auto& s : enumerate_obstructed_strata(degree, parts, pair_min))
          out.emplace_back(s.type.a, s.codim);
        return out;
      },
      py::arg("degree") = 16, py::arg("parts") = 5, py::arg("pair_min") = 9);
  m.def("glp_regular", &glp_regular, py::arg("degree"), py::arg("ambient"));
  m.def("incidence_dimension", &incidence_dimension, py::arg("degree"), py::arg("ambient"));

  m.def(
      "g_lambda",
      [](const std::vector<int>& lam, int m) {
        return g_lambda(LambdaSequence{lam}, m).value;
      },
      py::arg("sequence"), py::arg("m") = 9);
  m.def(
      "enumerate_sequences",
      [](int degree) {
        std::vector<std::pair<std::vector<int>, long>> out;
        for (const auto& r : enumerate_sequences(degree))
          out.emplace_back(r.sequence.lambda, r.g_lambda);
        return out;
      },
      py::arg("degree") = 16);

  m.def(
      "min_forced_rewritings",
      [](int max_degree, int max_depth) {
        auto res = min_forced_rewritings(to_ideal(LambdaSequence{{9, 7}}),
                                         BezoutConstraints::defaults(), max_degree,
                                         max_depth);
        return std::make_tuple(res.status == RewriteSearchResult::Status::Found,
                               res.min_rewritings, res.states_explored);
      },
      py::arg("max_degree") = 7, py::arg("max_depth") = 16);

  m.def("semigroup_delta", &semigroup_delta, py::arg("generators"));
  m.def(
      "delta_invariant",
      [](const std::vector<std::vector<std::vector<std::pair<int, long>>>>& branches,
         int truncation) {
        BranchParam p;
        for (const auto& b : branches) {
          Branch br;
          for (const auto& c : b) {
            std::vector<std::pair<int, Integer>> coord;
            for (const auto& [e, v] : c) coord.emplace_back(e, Integer(v));
            br.coords.push_back(std::move(coord));
          }
          p.branches.push_back(std::move(br));
        }
        return delta_invariant(p, truncation);
      },
      py::arg("branches"), py::arg("truncation") = 16);
  m.def(
      "ramification_codim",
      [](const std::vector<int>& r) { return ramification_codim(RamificationType{r}); },
      py::arg("type"));
  m.def(
      "linearized_rank_conditions",
      [](const std::vector<int>& r) {
        auto res = linearized_rank_conditions(RamificationType{r});
        return std::make_tuple(res.independent_conditions, res.model_violation);
      },
      py::arg("type"));
  m.def(
      "quadruple_point_codim",
      [](int rank, int points, int target_dim, int point_moduli) {
        auto q = quadruple_point_codim(rank, points, target_dim, point_moduli);
        return std::make_pair(q.fixed, q.varied);
      },
      py::arg("rank") = 5, py::arg("points") = 4, py::arg("target_dim") = 5,
      py::arg("point_moduli") = 4);
  m.def("lemma_verdict", &lemma_verdict, py::arg("genus"));

  m.def(
      "run_all",
      [](unsigned long long seed, int primes, bool exact) {
        PipelineConfig cfg;
        cfg.seed = seed;
        cfg.prime_count = primes;
        cfg.force_exact = exact;
        return run_all(cfg).render_json();
      },
      py::arg("seed") = 0, py::arg("primes") = 2, py::arg("exact") = false);
}
