"""Row reduction of labeled n-grids.

One reduction turns an n-grid into an electrically equivalent (n-1)-grid:

1. every upright triangle becomes a three-legged star (delta-wye);
2. the three legs hanging off the grid corners are set aside as tails;
3. legs meeting at a boundary vertex are joined in series;
4. the three legs meeting at an interior vertex become a triangle (wye-delta).

The star centre of parent triangle ``<r, d>`` becomes the apex of child
triangle ``<r, d>``.  Legs are named by clock position as seen from the
star centre: ``12`` points to the apex, ``8`` to the bottom-left vertex,
``4`` to the bottom-right vertex.

Besides :func:`reduce_once`, which walks steps 1-4 over the whole grid, the
module exposes per-edge formulas (``*_edge_value``) that compute a single
child edge from the few parent triangles it depends on.  The two routes are
independent and are cross-checked in the tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .grid import (
    Grid,
    GridError,
    PreType,
    make_uniform_grid,
)
from .transforms import delta, series, wye


@dataclass(frozen=True)
class CornerTails:
    top: Fraction
    bottom_left: Fraction
    bottom_right: Fraction

    def as_tuple(self):
        return (self.top, self.bottom_left, self.bottom_right)


@dataclass(frozen=True)
class ReductionTrace:
    grids: tuple
    tails: tuple

    @property
    def final(self) -> Grid:
        return self.grids[-1]


# -- star legs of one triangle --------------------------------------------------


def leg12(t) -> Fraction:
    left, right, base = t
    return delta(left, right, base)


def leg8(t) -> Fraction:
    left, right, base = t
    return delta(base, left, right)


def leg4(t) -> Fraction:
    left, right, base = t
    return delta(right, base, left)


def star(t):
    """(leg12, leg8, leg4) of a triangle's wye equivalent."""
    left, right, base = t
    total = left + right + base
    return left * right / total, base * left / total, right * base / total


# -- full reduction -------------------------------------------------------------


def reduce_once(g: Grid):
    """One row reduction.  Returns ``(child, tails)``."""
    n = g.n
    if n < 2:
        raise GridError("reduce_once needs at least two rows; use reduce_final")
    legs = [[star(t) for t in row] for row in g.rows]

    def y12(r, d):
        return legs[r - 1][d - 1][0]

    def y8(r, d):
        return legs[r - 1][d - 1][1]

    def y4(r, d):
        return legs[r - 1][d - 1][2]

    m = n - 1
    left = [[None] * r for r in range(1, m + 1)]
    right = [[None] * r for r in range(1, m + 1)]
    base = [[None] * r for r in range(1, m + 1)]

    # boundary vertices of the parent: two legs each, joined in series
    for r in range(1, m + 1):
        left[r - 1][0] = series(y8(r, 1), y12(r + 1, 1))
        right[r - 1][r - 1] = series(y4(r, r), y12(r + 1, r + 1))
    for d in range(1, m + 1):
        base[m - 1][d - 1] = series(y4(n, d), y8(n, d + 1))

    # interior vertex = apex of <R, D>, 2 <= D <= R - 1: legs from <R, D>,
    # <R-1, D> and <R-1, D-1>; each child edge faces away from one leg
    for R in range(3, n + 1):
        for D in range(2, R):
            a, b, c = y12(R, D), y8(R - 1, D), y4(R - 1, D - 1)
            base[R - 3][D - 2] = wye(a, c, b)
            right[R - 2][D - 2] = wye(b, a, c)
            left[R - 2][D - 1] = wye(c, b, a)

    rows = tuple(
        tuple(PreType(left[r][d], right[r][d], base[r][d]) for d in range(r + 1))
        for r in range(m)
    )
    child = Grid(m, rows, g.original_n, g.reductions + 1)
    tails = CornerTails(y12(1, 1), y8(n, 1), y4(n, n))
    return child, tails


def reduce_final(g: Grid) -> CornerTails:
    """Wye legs of the last remaining triangle, as corner tails."""
    if g.n != 1:
        raise GridError(f"reduce_final needs a 1-grid, got n={g.n}")
    y12, y8, y4 = star(g.rows[0][0])
    return CornerTails(y12, y8, y4)


def reduce_to(g: Grid, k_prime: int):
    """Reduce ``g`` to ``k_prime`` rows.  Returns ``(grid, [tails, ...])``."""
    if not (1 <= k_prime <= g.n):
        raise GridError(f"target rows must lie in 1..{g.n}, got {k_prime}")
    tails = []
    while g.n > k_prime:
        g, t = reduce_once(g)
        tails.append(t)
    return g, tails


def trace(g: Grid, k_prime: int = 1) -> ReductionTrace:
    """Every intermediate grid from ``g`` down to ``k_prime`` rows."""
    if not (1 <= k_prime <= g.n):
        raise GridError(f"target rows must lie in 1..{g.n}, got {k_prime}")
    grids, tails = [g], []
    while g.n > k_prime:
        g, t = reduce_once(g)
        grids.append(g)
        tails.append(t)
    return ReductionTrace(tuple(grids), tuple(tails))


def full_tails(g: Grid) -> list:
    """Tails of all ``g.n`` reductions, the last one from :func:`reduce_final`."""
    final, tails = reduce_to(g, 1)
    return tails + [reduce_final(final)]


def corner_resistance(n: int) -> Fraction:
    """Resistance between two degree-2 corners of T(n), from accumulated tails."""
    if not isinstance(n, int) or n < 1:
        raise GridError(f"n must be a positive integer, got {n!r}")
    return 2 * sum(t.top for t in full_tails(make_uniform_grid(n)))


def pair_resistance_from_tails(tails, corners=("top", "bottom_left")) -> Fraction:
    """Resistance between two corners of any grid, given its full tail list."""
    a, b = corners
    return sum(getattr(t, a) + getattr(t, b) for t in tails)


# -- single-edge formulas ------------------------------------------------------
#
# Triangles are passed in clockwise order starting from the smallest
# diagonal, as (left, right, base) triples.


def base_from(upper_left, upper_right, below) -> Fraction:
    """Child base of <r, d> from parent <r+1, d>, <r+1, d+1>, <r+2, d+1>."""
    return wye(leg12(below), leg4(upper_left), leg8(upper_right))


def boundary_from(upper, lower) -> Fraction:
    """Child left edge of <r, 1> from parent <r, 1> and <r+1, 1>."""
    return series(leg8(upper), leg12(lower))


def left_from(left_nb, here, below) -> Fraction:
    """Child left edge of <r, d> from parent <r, d-1>, <r, d>, <r+1, d>."""
    return wye(leg4(left_nb), leg8(here), leg12(below))


def right_from(here, right_nb, below) -> Fraction:
    """Child right edge of <r, d> from parent <r, d>, <r, d+1>, <r+1, d+1>."""
    return wye(leg8(right_nb), leg12(below), leg4(here))


def _need(cond, msg):
    if not cond:
        raise IndexError(msg)


def base_edge_value(g: Grid, r: int, d: int) -> Fraction:
    _need(1 <= d <= r <= g.n - 2, f"base edge <{r},{d},3> needs 1 <= d <= r <= n-2 (n={g.n})")
    return base_from(g.triangle(r + 1, d), g.triangle(r + 1, d + 1), g.triangle(r + 2, d + 1))


def boundary_edge_value(g: Grid, r: int) -> Fraction:
    _need(1 <= r <= g.n - 1, f"boundary edge <{r},1,1> needs 1 <= r <= n-1 (n={g.n})")
    return boundary_from(g.triangle(r, 1), g.triangle(r + 1, 1))


def left_edge_value(g: Grid, r: int, d: int) -> Fraction:
    _need(2 <= d <= r <= g.n - 1, f"left edge <{r},{d},1> needs 2 <= d <= r <= n-1 (n={g.n})")
    return left_from(g.triangle(r, d - 1), g.triangle(r, d), g.triangle(r + 1, d))


def right_edge_value(g: Grid, r: int, d: int) -> Fraction:
    _need(1 <= d <= r - 1 and r <= g.n - 1, f"right edge <{r},{d},2> needs d <= r-1, r <= n-1 (n={g.n})")
    return right_from(g.triangle(r, d), g.triangle(r, d + 1), g.triangle(r + 1, d + 1))


def lemma_child_edges(g: Grid) -> dict:
    """Every child edge reachable by the single-edge formulas, keyed by (r, d, e)."""
    out = {}
    for r in range(1, g.n):
        out[(r, 1, 1)] = boundary_edge_value(g, r)
        for d in range(2, r + 1):
            out[(r, d, 1)] = left_edge_value(g, r, d)
        for d in range(1, r):
            out[(r, d, 2)] = right_edge_value(g, r, d)
        if r <= g.n - 2:
            for d in range(1, r + 1):
                out[(r, d, 3)] = base_edge_value(g, r, d)
    return out


def reduce_symmetric(g: Grid) -> Grid:
    """Reduce a fully symmetric grid via the single-edge formulas.

    Only edges of the child's upper left half are computed; the rest follow
    from the grid symmetries.  Raises if the completion finds a clash, which
    happens when ``g`` is not symmetric.
    """
    from .structure import complete_from_edges, upper_left_half

    if g.n < 2:
        raise GridError("reduce_symmetric needs at least two rows")
    m = g.n - 1
    known = {}
    for r, d in upper_left_half(m):
        if d == 1:
            known[(r, 1, 1)] = boundary_edge_value(g, r)
        else:
            known[(r, d, 1)] = left_edge_value(g, r, d)
        if d <= r - 1:
            known[(r, d, 2)] = right_edge_value(g, r, d)
        if r <= g.n - 2:
            known[(r, d, 3)] = base_edge_value(g, r, d)
    child = complete_from_edges(m, known)
    return Grid(child.n, child.rows, g.original_n, g.reductions + 1)
