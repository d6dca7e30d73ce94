"""Python bindings for the hepticheck verification kernels."""

import json

from ._hepticheck import (
    castelnuovo_bound,
    delta_invariant,
    enumerate_obstructed_strata,
    enumerate_sequences,
    g_lambda,
    glp_regular,
    incidence_dimension,
    lemma_verdict,
    linearized_rank_conditions,
    min_forced_rewritings,
    quadruple_point_codim,
    ramification_codim,
    required_estimate,
    run_all,
    semigroup_delta,
    stratum_codim,
)

__all__ = [
    "castelnuovo_bound",
    "delta_invariant",
    "enumerate_obstructed_strata",
    "enumerate_sequences",
    "g_lambda",
    "glp_regular",
    "incidence_dimension",
    "lemma_verdict",
    "linearized_rank_conditions",
    "min_forced_rewritings",
    "quadruple_point_codim",
    "ramification_codim",
    "required_estimate",
    "run_all",
    "run_all_report",
    "semigroup_delta",
    "stratum_codim",
]


def run_all_report(seed=0, primes=2, exact=False):
    """Run every pipeline and return the report as a dict."""
    return json.loads(run_all(seed=seed, primes=primes, exact=exact))
