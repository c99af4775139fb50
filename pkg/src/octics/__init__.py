"""Euler numbers of Calabi-Yau double octics built from octic arrangements."""

from .invariants import (
    base_euler,
    euler_big_resolution,
    euler_numbers,
    euler_small_resolution,
    noether_check,
    surface_invariants,
)
from .catalog import expanded_rows, verify_catalog
from .enumerator import SearchBounds, coverage, enumerate_arrangements
from .feasibility import max_nodes, validate
from .kernels import BACKEND
from .ledger import build_trace, cross_check, render_trace
from .model import (
    Arrangement,
    ArrangementPoints,
    ComponentSurface,
    SingularityTotals,
    aggregate_totals,
    canonical_form,
    make_arrangement,
    parse_arrangement,
    serialize_arrangement,
)

__version__ = "0.1.0"
