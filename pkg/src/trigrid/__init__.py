"""Exact row reduction of triangular resistor grids, with a Laplacian oracle and
a verification harness for the patterns that appear in reduced uniform grids."""

from .grid import (
    EdgeRef,
    Grid,
    GridError,
    GridParseError,
    PreType,
    TriRef,
    WeightedGraph,
    deserialize,
    get_edge,
    make_uniform_grid,
    pretype,
    same_type,
    serialize,
    set_edge,
    to_weighted_graph,
)
from .reduction import (
    CornerTails,
    corner_resistance,
    reduce_final,
    reduce_once,
    reduce_to,
)
from .transforms import delta, delta_to_y, series, wye, y_to_delta

__all__ = [
    "CornerTails", "EdgeRef", "Grid", "GridError", "GridParseError", "PreType", "TriRef",
    "WeightedGraph", "corner_resistance", "delta", "delta_to_y", "deserialize", "get_edge",
    "make_uniform_grid", "pretype", "reduce_final", "reduce_once", "reduce_to", "same_type",
    "serialize", "series", "set_edge", "to_weighted_graph", "wye", "y_to_delta",
]
