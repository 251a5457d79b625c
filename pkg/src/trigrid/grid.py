"""Labeled triangular grids.

A grid with ``n`` rows stores one ``(left, right, base)`` resistance triple
per upright triangle ``<r, d>`` (``1 <= d <= r <= n``).  Every physical edge
of the grid belongs to exactly one upright triangle, so this is the whole
labeling; downward triangles are never stored.

Indices are 1-based throughout: rows top to bottom, diagonals left to right,
edge selectors 1 = left, 2 = right, 3 = base.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple, Union

RationalLike = Union[Fraction, int, str]

LEFT, RIGHT, BASE = 1, 2, 3
EDGE_NAMES = {LEFT: "left", RIGHT: "right", BASE: "base"}


class GridError(ValueError):
    """Invalid argument or malformed grid data."""


class GridParseError(GridError):
    """Raised by :func:`deserialize`; ``location`` points at the bad entry."""

    def __init__(self, message, location=None):
        self.location = location
        if location is not None:
            message = f"{location}: {message}"
        super().__init__(message)


class TriRef(NamedTuple):
    r: int
    d: int


class EdgeRef(NamedTuple):
    r: int
    d: int
    e: int

    @property
    def tri(self) -> TriRef:
        return TriRef(self.r, self.d)


class PreType(NamedTuple):
    """Edge values of one triangle, clockwise from the left edge."""

    left: Fraction
    right: Fraction
    base: Fraction


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise GridError("floating-point labels are not allowed; use Fraction or 'p/q'")
    return Fraction(value)


def format_rational(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse a ``p/q`` (or bare integer) string into an exact Fraction."""
    if not isinstance(text, str):
        raise GridError(f"expected a 'p/q' string, got {text!r}")
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise GridError(f"not a rational literal: {text!r}") from None
    if q == 0:
        raise GridError(f"zero denominator: {text!r}")
    return Fraction(p, q)


def _check_positive(value: Fraction, where) -> None:
    if value <= 0:
        raise GridError(f"resistance at {where} must be positive, got {value}")


@dataclass(frozen=True, eq=False)
class Grid:
    """Immutable labeled n-grid.

    ``rows[r - 1][d - 1]`` is the pre-type of triangle ``<r, d>``.
    ``original_n`` and ``reductions`` record provenance for T(k, k'); they do
    not take part in equality, which compares labels only.
    """

    n: int
    rows: tuple
    original_n: int | None = None
    reductions: int = 0

    def __post_init__(self):
        if self.n < 1:
            raise GridError(f"grid needs at least one row, got n={self.n}")
        if len(self.rows) != self.n:
            raise GridError(f"expected {self.n} rows of labels, got {len(self.rows)}")
        for r, row in enumerate(self.rows, start=1):
            if len(row) != r:
                raise GridError(f"row {r} must hold {r} triangles, got {len(row)}")
            for d, tri in enumerate(row, start=1):
                for e, value in enumerate(tri, start=1):
                    _check_positive(value, EdgeRef(r, d, e))

    def __eq__(self, other):
        if not isinstance(other, Grid):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        prov = ""
        if self.original_n is not None:
            prov = f", T({self.original_n},{self.n})"
        return f"Grid(n={self.n}{prov})"

    def triangle(self, r: int, d: int) -> PreType:
        _check_tri(self.n, r, d)
        return self.rows[r - 1][d - 1]

    def __getitem__(self, ref) -> Fraction:
        if len(ref) == 3:
            return get_edge(self, EdgeRef(*ref))
        return self.triangle(*ref)

    def triangles(self) -> Iterator[TriRef]:
        return iter_triangles(self.n)

    def edges(self) -> Iterator[tuple[EdgeRef, Fraction]]:
        for r, row in enumerate(self.rows, start=1):
            for d, tri in enumerate(row, start=1):
                for e in (LEFT, RIGHT, BASE):
                    yield EdgeRef(r, d, e), tri[e - 1]

    def values(self) -> set:
        return {v for _, v in self.edges()}


def iter_triangles(n: int) -> Iterator[TriRef]:
    for r in range(1, n + 1):
        for d in range(1, r + 1):
            yield TriRef(r, d)


def iter_edges(n: int) -> Iterator[EdgeRef]:
    for r, d in iter_triangles(n):
        for e in (LEFT, RIGHT, BASE):
            yield EdgeRef(r, d, e)


def _check_tri(n, r, d):
    if not (1 <= d <= r <= n):
        raise IndexError(f"triangle <{r},{d}> is outside a {n}-grid")


def _check_edge(n, ref):
    _check_tri(n, ref[0], ref[1])
    if ref[2] not in (LEFT, RIGHT, BASE):
        raise IndexError(f"edge selector must be 1, 2 or 3, got {ref[2]}")


def grid_from_rows(rows, original_n=None, reductions=0) -> Grid:
    """Build a grid from nested ``rows[r-1][d-1] = (left, right, base)``."""
    frozen = tuple(
        tuple(PreType(*(as_rational(v) for v in tri)) for tri in row) for row in rows
    )
    return Grid(len(frozen), frozen, original_n, reductions)


def grid_from_mapping(n: int, labels, original_n=None, reductions=0) -> Grid:
    """Build a grid from a mapping ``TriRef -> (left, right, base)``."""
    rows = []
    for r in range(1, n + 1):
        row = []
        for d in range(1, r + 1):
            try:
                row.append(labels[(r, d)])
            except KeyError:
                raise GridError(f"missing labels for triangle <{r},{d}>") from None
        rows.append(row)
    extra = set(map(tuple, labels)) - set(iter_triangles(n))
    if extra:
        raise GridError(f"labels given outside the {n}-grid: {sorted(extra)}")
    return grid_from_rows(rows, original_n, reductions)


def make_uniform_grid(n: int, label: RationalLike = 1) -> Grid:
    """T(n) when ``label`` is 1: every edge carries the same resistance."""
    label = as_rational(label)
    if not isinstance(n, int) or n < 1:
        raise GridError(f"n must be a positive integer, got {n!r}")
    if label <= 0:
        raise GridError(f"label must be positive, got {label}")
    tri = PreType(label, label, label)
    rows = tuple(tuple(tri for _ in range(r)) for r in range(1, n + 1))
    return Grid(n, rows, original_n=n if label == 1 else None)


def get_edge(g: Grid, ref) -> Fraction:
    ref = EdgeRef(*ref)
    _check_edge(g.n, ref)
    return g.rows[ref.r - 1][ref.d - 1][ref.e - 1]


def set_edge(g: Grid, ref, value: RationalLike) -> Grid:
    """Return a copy of ``g`` with one edge relabeled."""
    ref = EdgeRef(*ref)
    _check_edge(g.n, ref)
    value = as_rational(value)
    if value <= 0:
        raise GridError(f"resistance must be positive, got {value}")
    row = list(g.rows[ref.r - 1])
    tri = list(row[ref.d - 1])
    tri[ref.e - 1] = value
    row[ref.d - 1] = PreType(*tri)
    rows = list(g.rows)
    rows[ref.r - 1] = tuple(row)
    return Grid(g.n, tuple(rows), g.original_n, g.reductions)


def pretype(g: Grid, t) -> PreType:
    return g.triangle(*t)


def type_orbit(p) -> set:
    """All triples reachable from ``p`` by the triangle's reflections and rotations."""
    left, right, base = p
    seeds = [(left, right, base), (right, left, base)]
    orbit = set()
    for a, b, c in seeds:
        orbit.update({(a, b, c), (b, c, a), (c, a, b)})
    return orbit


def same_type(p, q) -> bool:
    return tuple(q) in type_orbit(p)


# -- geometry ---------------------------------------------------------------
#
# Vertex coordinates follow the integer lattice {(2r + s, s)}: the top corner
# is (n, n), the bottom corners are (0, 0) and (2n, 0).  Upright triangle
# <r, d> has its apex at height n - r + 1 and its base at height n - r.


def triangle_vertices(n: int, r: int, d: int):
    """(apex, bottom_left, bottom_right) coordinates of upright triangle <r, d>."""
    x = n - r + 2 * d - 1
    y = n - r + 1
    return (x, y), (x - 1, y - 1), (x + 1, y - 1)


def edge_endpoints(n: int, ref):
    apex, bl, br = triangle_vertices(n, ref[0], ref[1])
    e = ref[2]
    if e == LEFT:
        return apex, bl
    if e == RIGHT:
        return apex, br
    return bl, br


def grid_vertices(n: int) -> list:
    return [(2 * r + s, s) for r in range(n + 1) for s in range(n - r + 1)]


@dataclass(frozen=True)
class WeightedGraph:
    """Vertices are lattice points; ``edges`` maps ``frozenset({u, v})`` to conductance."""

    vertices: frozenset
    edges: dict

    def neighbors(self, v):
        out = []
        for pair in self.edges:
            if v in pair:
                (w,) = pair - {v}
                out.append(w)
        return out

    def degree(self, v) -> int:
        return sum(1 for pair in self.edges if v in pair)

    def index(self) -> dict:
        return {v: i for i, v in enumerate(sorted(self.vertices))}


_OFFSETS = {(1, 1), (2, 0), (1, -1)}


def to_weighted_graph(g: Grid) -> WeightedGraph:
    verts = frozenset(grid_vertices(g.n))
    edges = {}
    for ref, value in g.edges():
        u, v = edge_endpoints(g.n, ref)
        a, b = sorted((u, v))
        assert (b[0] - a[0], b[1] - a[1]) in _OFFSETS, (ref, a, b)
        key = frozenset((u, v))
        assert key not in edges, f"edge {ref} aliases another triangle's edge"
        edges[key] = 1 / value
    return WeightedGraph(verts, edges)


# -- serialization ------------------------------------------------------------


def grid_to_dict(g: Grid) -> dict:
    return {
        "n": g.n,
        "original_n": g.original_n,
        "reductions": g.reductions,
        "triangles": [
            {"r": r, "d": d, "edges": [format_rational(v) for v in g.rows[r - 1][d - 1]]}
            for r, d in iter_triangles(g.n)
        ],
    }


def serialize(g: Grid) -> str:
    return json.dumps(grid_to_dict(g), indent=1)


def grid_from_dict(data) -> Grid:
    if not isinstance(data, dict):
        raise GridParseError("top level must be an object", "$")
    for key in ("n", "triangles"):
        if key not in data:
            raise GridParseError(f"missing key {key!r}", "$")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise GridParseError(f"n must be a positive integer, got {n!r}", "$.n")
    original_n = data.get("original_n")
    if original_n is not None and (not isinstance(original_n, int) or original_n < n):
        raise GridParseError(f"bad original_n {original_n!r}", "$.original_n")
    reductions = data.get("reductions", 0)
    if not isinstance(reductions, int) or reductions < 0:
        raise GridParseError(f"bad reductions {reductions!r}", "$.reductions")

    labels = {}
    triangles = data["triangles"]
    if not isinstance(triangles, list):
        raise GridParseError("must be a list", "$.triangles")
    for i, item in enumerate(triangles):
        loc = f"$.triangles[{i}]"
        try:
            r, d, raw = item["r"], item["d"], item["edges"]
        except (TypeError, KeyError) as exc:
            raise GridParseError(f"triangle entry lacks {exc}", loc) from None
        if not (isinstance(r, int) and isinstance(d, int) and 1 <= d <= r <= n):
            raise GridParseError(f"triangle <{r},{d}> outside a {n}-grid", loc)
        if (r, d) in labels:
            raise GridParseError(f"duplicate triangle <{r},{d}>", loc)
        if not isinstance(raw, list) or len(raw) != 3:
            raise GridParseError("edges must be a list of three 'p/q' strings", loc)
        values = []
        for e, text in enumerate(raw, start=1):
            try:
                value = parse_rational(text)
            except GridError as exc:
                raise GridParseError(str(exc), f"{loc}.edges[{e - 1}]") from None
            if value <= 0:
                raise GridParseError(
                    f"resistance must be positive, got {text!r}", f"{loc}.edges[{e - 1}]"
                )
            values.append(value)
        labels[(r, d)] = values
    missing = [t for t in iter_triangles(n) if t not in labels]
    if missing:
        r, d = missing[0]
        raise GridParseError(f"missing triangle <{r},{d}> ({len(missing)} missing)", "$.triangles")
    return grid_from_mapping(n, labels, original_n, reductions)


def deserialize(text: str) -> Grid:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} col {exc.colno}") from None
    return grid_from_dict(data)
