"""Regularity and degree of K[E_G]/I(X) for graph-parameterized projective toric subsets."""

import json as _json

from ._core import (
    Error,
    Graph,
    binomial_in_ideal,
    count_points,
    degree,
    formula,
    in_ideal_plus_edge,
    parse_graph,
    reg_parallel,
    regularity_rank,
    regularity_sieve,
    report_json,
    run_command,
)


def report(spec, q, bounds=False):
    """Cross-check report for one graph as a dict."""
    return _json.loads(report_json(spec, q, bounds))


__all__ = [
    "Error",
    "Graph",
    "binomial_in_ideal",
    "count_points",
    "degree",
    "formula",
    "in_ideal_plus_edge",
    "parse_graph",
    "reg_parallel",
    "regularity_rank",
    "regularity_sieve",
    "report",
    "report_json",
    "run_command",
]
