"""Homeomorphically irreducible spanning trees (HISTs): exact search and
counting, HIST-critical classification, fragment verification, explicit
constructions, isomorph-free generation and independent oracles."""

from .classify import (
    Classification,
    Fragment,
    FragmentReport,
    Verdict,
    check_even_cubic_property,
    classify,
    is_hist_critical,
    is_k1_histonian,
    verify_fragment,
)
from .generate import GenConstraints, brute_mask_generate, certificate, generate
from .graph import (
    Graph,
    Graph6Error,
    GraphError,
    SizeError,
    from_graph6,
    girth,
    is_planar,
    to_graph6,
    vertex_connectivity_at_least,
)
from .search import (
    count_hists,
    enumerate_excluded_hists,
    enumerate_split_hisfs,
    find_hist,
    has_hist,
)

__all__ = [
    "Classification", "Fragment", "FragmentReport", "GenConstraints", "Graph", "Graph6Error",
    "GraphError", "SizeError", "Verdict", "brute_mask_generate", "certificate",
    "check_even_cubic_property", "classify", "count_hists", "enumerate_excluded_hists",
    "enumerate_split_hisfs", "find_hist", "from_graph6", "generate", "girth", "has_hist",
    "is_hist_critical", "is_k1_histonian", "is_planar", "to_graph6", "verify_fragment",
    "vertex_connectivity_at_least",
]
