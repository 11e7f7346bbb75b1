"""Maximal 1-plane drawings without large cliques."""

from __future__ import annotations

from .certify import BoundEntry, Certificate, SearchLimits, certify, drawing_search, maxe_bound
from .cliques import AbstractGraph, find_clique, has_clique, turan_graph, turan_size
from .constructions import (
    gen_cube_g8,
    gen_k4_extremal,
    gen_k5_optimal,
    gen_ladder_H,
    gen_turan_drawing,
    load_fixture,
    q4_addition,
)
from .drawing import Crossing, OnePlaneDrawing
from .errors import DrawingError
from .invariants import check_edge_formula, compute_invariants
from .opg import parse, serialize

__all__ = [
    "AbstractGraph",
    "BoundEntry",
    "Certificate",
    "Crossing",
    "DrawingError",
    "OnePlaneDrawing",
    "SearchLimits",
    "certify",
    "check_edge_formula",
    "compute_invariants",
    "drawing_search",
    "find_clique",
    "gen_cube_g8",
    "gen_k4_extremal",
    "gen_k5_optimal",
    "gen_ladder_H",
    "gen_turan_drawing",
    "has_clique",
    "load_fixture",
    "maxe_bound",
    "parse",
    "q4_addition",
    "serialize",
    "turan_graph",
    "turan_size",
]
__version__ = "0.1.0"
