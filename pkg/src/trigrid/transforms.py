"""Series, delta-wye and wye-delta equivalences on exact resistances.

Scalar conventions:

* ``delta(x, y, z)``: the Y leg at the vertex shared by the edges labeled
  ``x`` and ``y``; ``z`` is the opposite edge.
* ``wye(x, y, z)``: the triangle edge facing away from leg ``x``, i.e. the
  edge joining the endpoints of legs ``y`` and ``z``.
"""

from fractions import Fraction

from .grid import GridError, as_rational


def _positive(*values):
    out = []
    for v in values:
        v = as_rational(v)
        if v <= 0:
            raise GridError(f"resistances must be positive, got {v}")
        out.append(v)
    return out


def series(a, b) -> Fraction:
    a, b = _positive(a, b)
    return a + b


def delta(x, y, z) -> Fraction:
    x, y, z = _positive(x, y, z)
    return x * y / (x + y + z)


def wye(x, y, z) -> Fraction:
    x, y, z = _positive(x, y, z)
    return (x * y + y * z + z * x) / x


def delta_to_y(ra, rb, rc):
    """Triangle (R_A, R_B, R_C) to star legs (R_1, R_2, R_3).

    R_A joins N2-N3, R_B joins N1-N3, R_C joins N1-N2; leg R_i ends at N_i.
    """
    ra, rb, rc = _positive(ra, rb, rc)
    total = ra + rb + rc
    return rb * rc / total, ra * rc / total, ra * rb / total


def y_to_delta(r1, r2, r3):
    r1, r2, r3 = _positive(r1, r2, r3)
    p = r1 * r2 + r1 * r3 + r2 * r3
    return p / r1, p / r2, p / r3
