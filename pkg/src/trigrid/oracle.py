"""Effective resistance from the grounded graph Laplacian.

The exact route scales conductances to integers, grounds one terminal and
solves ``L' x = e_u`` by fraction-free (Bareiss) elimination, so every
intermediate entry stays an integer.
"""

from __future__ import annotations

import math
import os
from fractions import Fraction

import numpy as np

from .grid import GridError, Grid, to_weighted_graph, WeightedGraph

EXACT_MAX_N = 8


class DisconnectedGraphError(GridError):
    """The two terminals are not joined by any path."""


def corner_vertices(n: int):
    """(top, bottom_left, bottom_right) lattice points of an n-grid."""
    if n < 1:
        raise GridError(f"n must be positive, got {n}")
    return (n, n), (0, 0), (2 * n, 0)


def _component(wg: WeightedGraph, start) -> set:
    adj = {}
    for pair in wg.edges:
        a, b = tuple(pair)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    seen, stack = {start}, [start]
    while stack:
        v = stack.pop()
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def _grounded_system(wg, u, v):
    """Integer grounded Laplacian over the component of ``u``, with ``u`` ordered last."""
    if u == v:
        raise GridError("effective resistance needs two distinct vertices")
    for w in (u, v):
        if w not in wg.vertices:
            raise GridError(f"vertex {w} is not in the graph")
    comp = _component(wg, u)
    if v not in comp:
        raise DisconnectedGraphError(f"no path between {u} and {v}")
    for c in wg.edges.values():
        if c <= 0:
            raise GridError(f"conductances must be positive, got {c}")
    order = sorted((w for w in comp if w not in (u, v)), key=repr) + [u]
    index = {w: i for i, w in enumerate(order)}
    scale = math.lcm(*(Fraction(c).denominator for c in wg.edges.values()))
    size = len(order)
    mat = [[0] * size for _ in range(size)]
    for pair, c in wg.edges.items():
        a, b = tuple(pair)
        if a not in comp:
            continue
        w = int(Fraction(c) * scale)
        ia, ib = index.get(a), index.get(b)
        if ia is not None:
            mat[ia][ia] += w
        if ib is not None:
            mat[ib][ib] += w
        if ia is not None and ib is not None:
            mat[ia][ib] -= w
            mat[ib][ia] -= w
    return mat, scale


def bareiss_solve_last(mat, rhs):
    """Last component of the solution of ``mat @ x = rhs`` (integer entries).

    Forward Bareiss elimination on the augmented matrix; after it, the last
    row reads ``pivot * x_last = rhs_last``.
    """
    size = len(mat)
    a = [list(row) + [b] for row, b in zip(mat, rhs)]
    prev = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            for i in range(k + 1, size):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    break
            else:
                raise ZeroDivisionError("singular system")
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, size):
            row_i = a[i]
            f = row_i[k]
            for j in range(k + 1, size + 1):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    if a[-1][-2] == 0:
        raise ZeroDivisionError("singular system")
    return Fraction(a[-1][-1], a[-1][-2])


def effective_resistance(wg: WeightedGraph, u, v, *, max_vertices: int | None = None) -> Fraction:
    """Exact effective resistance between ``u`` and ``v``."""
    mat, scale = _grounded_system(wg, u, v)
    if max_vertices is not None and len(mat) + 1 > max_vertices:
        raise GridError(f"exact solve limited to {max_vertices} vertices, graph has {len(mat) + 1}")
    rhs = [0] * (len(mat) - 1) + [1]
    return bareiss_solve_last(mat, rhs) * scale


def float_effective_resistance(wg: WeightedGraph, u, v) -> float:
    """Double-precision effective resistance; for trend reports only."""
    mat, scale = _grounded_system(wg, u, v)
    a = np.array([[float(x) for x in row] for row in mat])
    rhs = np.zeros(len(mat))
    rhs[-1] = 1.0
    return float(np.linalg.solve(a, rhs)[-1]) * scale


def exact_limit() -> int:
    return int(os.environ.get("TRIGRID_ORACLE_MAX_N", EXACT_MAX_N))


def oracle_corner_resistance(g: Grid | int, pair=("top", "bottom_left"), *, override=False) -> Fraction:
    """Exact resistance between two corners of a grid (or of T(n) for an int)."""
    from .grid import make_uniform_grid

    if isinstance(g, int):
        g = make_uniform_grid(g)
    if not override and g.n > exact_limit():
        raise GridError(
            f"exact oracle is capped at n <= {exact_limit()} (got {g.n}); pass override=True"
        )
    names = ("top", "bottom_left", "bottom_right")
    corners = dict(zip(names, corner_vertices(g.n)))
    return effective_resistance(to_weighted_graph(g), corners[pair[0]], corners[pair[1]])
