import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from trigrid.grid import EdgeRef, grid_from_rows
from trigrid.structure import complete_from_edges, symmetry_orbits

positive_rationals = st.builds(
    Fraction, st.integers(min_value=1, max_value=10**6), st.integers(min_value=1, max_value=10**6)
)


def random_rational(rng, hi=50):
    return Fraction(rng.randint(1, hi), rng.randint(1, hi))


def random_grid(rng, n, hi=50):
    return grid_from_rows(
        [[tuple(random_rational(rng, hi) for _ in range(3)) for _ in range(r)] for r in range(1, n + 1)]
    )


def random_symmetric_grid(rng, n, hi=50):
    known = {orbit[0]: random_rational(rng, hi) for orbit in symmetry_orbits(n)}
    return complete_from_edges(n, known)


@pytest.fixture
def rng():
    return random.Random(20261017)


def edge(r, d, e):
    return EdgeRef(r, d, e)


ACCEPTANCE_LINES = []


def record_criterion(number, title, ok, detail=""):
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}: {title}" + (f" ({detail})" if detail else "")
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
