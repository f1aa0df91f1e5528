"""Decide whether a graph has a proper distinguishing 2-coloring.

Thin wrapper over the C++ core; see the package README for the CLI.
"""

from ._core import (
    Graph,
    ParseError,
    ThresholdError,
    are_isomorphic,
    bipartition,
    brute_chi_d_le_2,
    canonical_key,
    cc_to_ga,
    decide,
    ga_to_cc,
    has_nta,
    parse_edge_list,
    parse_graph6,
    verify_distinguishing,
    write_graph6,
)

__all__ = [
    "Graph",
    "ParseError",
    "ThresholdError",
    "are_isomorphic",
    "bipartition",
    "brute_chi_d_le_2",
    "canonical_key",
    "cc_to_ga",
    "decide",
    "ga_to_cc",
    "has_nta",
    "parse_edge_list",
    "parse_graph6",
    "verify_distinguishing",
    "write_graph6",
]
