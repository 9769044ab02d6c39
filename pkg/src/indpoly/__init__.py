"""Exact independence polynomials, their invariants, and closed forms for special families."""

from .engine import (
    InvariantReport,
    brute_force_polynomial,
    eval_minus_one,
    independence_number,
    independence_polynomial,
    report,
)
from .graph import Graph, complement, from_edge_list, induced, parse_edge_list, parse_graph6, encode_graph6
from .poly import IntPolynomial, h_transform, is_symmetric, multiplicity_at_minus_one

__version__ = "0.1.0"
