"""Exact independent domination and domination on small subcubic graphs."""
from __future__ import annotations

from .graph import Graph, GraphError, degree_profile, girth, has_four_cycle
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .solvers import SolveResult, domination_number, independent_domination_number, verify_set

__all__ = [
    "Graph",
    "GraphError",
    "Graph6Error",
    "SolveResult",
    "degree_profile",
    "domination_number",
    "girth",
    "has_four_cycle",
    "independent_domination_number",
    "parse_graph6",
    "verify_set",
    "write_graph6",
]
__version__ = "0.1.0"
