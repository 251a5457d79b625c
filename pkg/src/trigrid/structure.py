"""Grid symmetries, the upper left half, concentric subgrids and uniform centres."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .grid import (
    BASE,
    LEFT,
    RIGHT,
    EdgeRef,
    Grid,
    GridError,
    TriRef,
    as_rational,
    get_edge,
    grid_from_rows,
    iter_edges,
    iter_triangles,
    same_type,
)

# -- symmetries -----------------------------------------------------------------


def vertical_image(n: int, ref) -> EdgeRef:
    r, d, e = ref
    return EdgeRef(r, r + 1 - d, {LEFT: RIGHT, RIGHT: LEFT, BASE: BASE}[e])


def rotational_image(n: int, ref) -> EdgeRef:
    r, d, e = ref
    return EdgeRef(n + d - r, n + 1 - r, {LEFT: RIGHT, RIGHT: BASE, BASE: LEFT}[e])


def slide_image(n: int, ref) -> EdgeRef | None:
    r, d, e = ref
    if e != LEFT:
        return None
    return EdgeRef(n + d - r, d, LEFT)


_IMAGES = {
    "vertical": vertical_image,
    "rotational": rotational_image,
    "slide": slide_image,
}


class SymmetryViolation(NamedTuple):
    kind: str
    edge: EdgeRef
    image: EdgeRef
    value: object
    image_value: object

    def __str__(self):
        return (
            f"{self.kind} symmetry fails: <{self.edge.r},{self.edge.d},{self.edge.e}> = "
            f"{self.value} but <{self.image.r},{self.image.d},{self.image.e}> = {self.image_value}"
        )


def symmetry_violation(g: Grid, kind: str) -> SymmetryViolation | None:
    """First edge whose label differs from its mirror image, or None."""
    image = _IMAGES[kind]
    for ref, value in g.edges():
        other = image(g.n, ref)
        if other is None:
            continue
        other_value = get_edge(g, other)
        if value != other_value:
            return SymmetryViolation(kind, ref, other, value, other_value)
    return None


def is_vertically_symmetric(g: Grid) -> bool:
    return symmetry_violation(g, "vertical") is None


def is_rotationally_symmetric(g: Grid) -> bool:
    return symmetry_violation(g, "rotational") is None


def is_slide_symmetric(g: Grid) -> bool:
    return symmetry_violation(g, "slide") is None


def is_symmetric(g: Grid) -> bool:
    return all(symmetry_violation(g, k) is None for k in _IMAGES)


def symmetry_orbits(n: int) -> list:
    """Partition of all edges of an n-grid into orbits of the vertical and rotational maps."""
    parent = {ref: ref for ref in iter_edges(n)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ref in list(parent):
        for image in (vertical_image(n, ref), rotational_image(n, ref)):
            a, b = find(ref), find(image)
            if a != b:
                parent[max(a, b)] = min(a, b)
    groups = {}
    for ref in parent:
        groups.setdefault(find(ref), []).append(ref)
    return [sorted(v) for _, v in sorted(groups.items())]


# -- upper left half -------------------------------------------------------------


def upper_left_half(n: int) -> list:
    if n < 1:
        raise GridError(f"n must be positive, got {n}")
    return [
        TriRef(r, d)
        for d in range(1, (n + 2) // 3 + 1)
        for r in range(2 * d - 1, (n + d) // 2 + 1)
    ]


def extract_upper_left_half(g: Grid) -> dict:
    return {t: g.triangle(*t) for t in upper_left_half(g.n)}


class SymmetryConflict(GridError):
    """Given labels contradict the grid symmetries."""


def complete_from_edges(n: int, known: dict) -> Grid:
    """The unique symmetric n-grid agreeing with ``known`` (EdgeRef -> value)."""
    labels = {}
    for orbit in symmetry_orbits(n):
        value = source = None
        for ref in orbit:
            if ref not in known:
                continue
            v = as_rational(known[ref])
            if value is None:
                value, source = v, ref
            elif v != value:
                raise SymmetryConflict(
                    f"<{source.r},{source.d},{source.e}> = {value} and "
                    f"<{ref.r},{ref.d},{ref.e}> = {v} are forced equal by symmetry"
                )
        if value is None:
            raise GridError(f"no label determines edge orbit starting at {orbit[0]}")
        for ref in orbit:
            labels[ref] = value
    rows = [
        [tuple(labels[(r, d, e)] for e in (LEFT, RIGHT, BASE)) for d in range(1, r + 1)]
        for r in range(1, n + 1)
    ]
    return grid_from_rows(rows)


def complete_from_upper_left_half(n: int, partial: dict) -> Grid:
    """Extend triangle labels given on the upper left half to a symmetric grid."""
    needed = upper_left_half(n)
    missing = [t for t in needed if tuple(t) not in {tuple(k) for k in partial}]
    if missing:
        raise GridError(f"labels missing for upper-left-half triangles {missing}")
    known = {}
    for (r, d), tri in partial.items():
        for e, v in zip((LEFT, RIGHT, BASE), tri):
            known[EdgeRef(r, d, e)] = v
    return complete_from_edges(n, known)


# -- subgrids ----------------------------------------------------------------------


@dataclass(frozen=True)
class SubgridSpec:
    n: int
    s: int
    corners: tuple
    triangle_set: frozenset
    boundary_triangles: frozenset
    boundary_edges: frozenset
    interior_edges: frozenset


def subgrid(n: int, s: int) -> SubgridSpec:
    """The s-subgrid of an n-grid: corners <2s-1, s>, <n+1-s, s>, <n+1-s, n+2-2s>.

    Membership: ``d >= s``, ``r - d >= s - 1`` and ``r <= n + 1 - s``.
    """
    if s < 1 or 2 * s - 1 > n + 1 - s:
        raise GridError(f"the {s}-subgrid of a {n}-grid is empty")
    bottom = n + 1 - s
    tris = frozenset(
        TriRef(r, d) for r, d in iter_triangles(n) if d >= s and r - d >= s - 1 and r <= bottom
    )
    bedges = set()
    for r, d in tris:
        if d == s:
            bedges.add(EdgeRef(r, d, LEFT))
        if r - d == s - 1:
            bedges.add(EdgeRef(r, d, RIGHT))
        if r == bottom:
            bedges.add(EdgeRef(r, d, BASE))
    all_edges = {EdgeRef(r, d, e) for r, d in tris for e in (LEFT, RIGHT, BASE)}
    btris = frozenset(TriRef(r, d) for r, d, _ in bedges)
    corners = (TriRef(2 * s - 1, s), TriRef(bottom, s), TriRef(bottom, n + 2 - 2 * s))
    return SubgridSpec(
        n, s, corners, tris, btris, frozenset(bedges), frozenset(all_edges - bedges)
    )


def max_subgrid_index(n: int) -> int:
    """Largest s whose s-subgrid of an n-grid is non-empty."""
    return (n + 2) // 3


def rim_index(n: int, ref) -> int | None:
    """The s for which ``ref`` lies on the edge boundary of the s-subgrid, if any."""
    r, d, e = ref
    if e == LEFT:
        s = d
    elif e == RIGHT:
        s = r - d + 1
    else:
        s = n + 1 - r
    if s > max_subgrid_index(n):
        return None
    return s if ref in subgrid(n, s).boundary_edges else None


# -- uniform centre -----------------------------------------------------------------


def uniform_center(n: int, s: int, d: int) -> range:
    """Rows of diagonal ``d`` in the uniform centre of T(n, n-s)."""
    if s < 1 or n < 4 * s:
        raise GridError(f"uniform centre needs n >= 4s, got n={n}, s={s}")
    if not (1 <= d <= s):
        raise GridError(f"diagonal must lie in 1..{s}, got {d}")
    return range(s + d, n - 2 * s + 1)


def uniform_center_triangles(n: int, s: int, d: int) -> list:
    """Centre triangles on diagonal ``d`` plus their vertical mirrors, in T(n, n-s)."""
    out = []
    for r in uniform_center(n, s, d):
        out.append(TriRef(r, d))
        mirror = TriRef(r, r + 1 - d)
        if mirror != (r, d):
            out.append(mirror)
    return out


def same_type_center_check(g: Grid, n: int, s: int, d: int) -> str | None:
    """None if every centre triangle on diagonal ``d`` (and mirrors) shares one type."""
    tris = uniform_center_triangles(n, s, d)
    if not tris:
        return None
    ref = g.triangle(*tris[0])
    for t in tris[1:]:
        p = g.triangle(*t)
        if not same_type(ref, p):
            return f"diagonal {d}: <{t.r},{t.d}> {tuple(map(str, p))} differs from <{tris[0].r},{tris[0].d}>"
    return None
