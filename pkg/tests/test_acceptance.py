"""One test per acceptance criterion; each records a PASS/FAIL line."""

import random
import time
from fractions import Fraction as F

import pytest

from trigrid.analysis import (
    THREE_OVER_2E,
    asymptotics_report,
    boundary_sequences,
    check_monotone_identity,
    check_printed_corollary_6_3,
    e_n_differences_shrink,
    reduced_family,
    uniform_center_sweep,
    vanishing_ones_sweep,
)
from trigrid.grid import iter_edges, make_uniform_grid, set_edge
from trigrid.oracle import oracle_corner_resistance
from trigrid.reduction import corner_resistance, lemma_child_edges, reduce_once, reduce_to
from trigrid.structure import (
    is_rotationally_symmetric,
    is_slide_symmetric,
    is_vertically_symmetric,
    subgrid,
)
from trigrid.transforms import delta, delta_to_y, series, wye, y_to_delta

from conftest import random_rational, random_symmetric_grid, record_criterion


@pytest.fixture(autouse=True)
def cold_cache():
    reduced_family.cache_clear()


def finish(number, title, failures, elapsed, limit):
    if elapsed >= limit:
        failures = failures + [f"took {elapsed:.2f}s, limit {limit}s"]
    detail = "; ".join(failures[:3]) if failures else f"{elapsed:.2f}s"
    record_criterion(number, title, not failures, detail)
    assert not failures, detail


def test_criterion_01_kernel_exactness():
    t0 = time.perf_counter()
    third = F(1, 3)
    failures = []
    if delta(1, 1, 1) != third:
        failures.append(f"delta(1,1,1) = {delta(1, 1, 1)}")
    if wye(third, third, third) != 1:
        failures.append(f"wye(1/3,1/3,1/3) = {wye(third, third, third)}")
    if series(third, third) != F(2, 3):
        failures.append(f"series(1/3,1/3) = {series(third, third)}")
    for value in (delta(1, 1, 1), wye(third, third, third), series(third, third)):
        if not isinstance(value, F):
            failures.append(f"{value!r} is not a Fraction")
    finish(1, "transformation kernel exactness", failures, time.perf_counter() - t0, 1)


def test_criterion_02_round_trip():
    rng = random.Random(2)
    t0 = time.perf_counter()
    failures = []
    for _ in range(1000):
        abc = tuple(random_rational(rng, 10**6) for _ in range(3))
        back = y_to_delta(*delta_to_y(*abc))
        if back != abc:
            failures.append(f"{abc} -> {back}")
    finish(2, "delta/wye round trip on 1000 triples", failures, time.perf_counter() - t0, 1)


def test_criterion_03_first_reduction_pattern():
    t0 = time.perf_counter()
    failures = []
    for n in range(2, 13):
        g, _ = reduce_once(make_uniform_grid(n))
        rim = subgrid(g.n, 1).boundary_edges
        for ref, value in g.edges():
            want = F(2, 3) if ref in rim else 1
            if value != want:
                failures.append(f"n={n} {tuple(ref)} = {value}, expected {want}")
    finish(3, "T(n,n-1) boundary 2/3 and interior 1 for n=2..12", failures,
           time.perf_counter() - t0, 5)


def test_criterion_04_oracle_equivalence():
    t0 = time.perf_counter()
    failures = []
    for n in range(1, 9):
        a, b = corner_resistance(n), oracle_corner_resistance(n)
        if a != b:
            failures.append(f"n={n}: tails {a} != laplacian {b}")
    finish(4, "corner resistance equals Laplacian for n=1..8", failures,
           time.perf_counter() - t0, 30)


def test_criterion_05_lemma_consistency():
    rng = random.Random(5)
    t0 = time.perf_counter()
    failures, checked = [], 0
    for _ in range(200):
        g = random_symmetric_grid(rng, rng.randint(2, 7))
        child, _ = reduce_once(g)
        for ref, value in lemma_child_edges(g).items():
            checked += 1
            if child[ref] != value:
                failures.append(f"n={g.n} edge {ref}: lemma {value} != reduction {child[ref]}")
    elapsed = time.perf_counter() - t0
    finish(5, f"single-edge formulas match reduce_once ({checked} edges)", failures, elapsed, 30)


def test_criterion_06_uniform_center():
    t0 = time.perf_counter()
    pairs = [(n, s) for s in (1, 2, 3) for n in range(4 * s, 4 * s + 7)]
    report = uniform_center_sweep(pairs)
    failures = [f"n={r['n']} s={r['s']} part {r['part']}: {r['detail']}" for r in report.failures()]
    if len(report.rows) != 3 * len(pairs):
        failures.append("missing rows")
    finish(6, "uniform centre parts a, b, c for s=1..3, n=4s..4s+6", failures,
           time.perf_counter() - t0, 60)


def test_criterion_07_vanishing_ones():
    t0 = time.perf_counter()
    report = vanishing_ones_sweep(range(1, 15))
    failures = [f"n={r['n']} s={r['s']} part {r['part']} ({r['backing']}): {r['counterexample']}"
                for r in report.failures()]
    covered = {(r["n"], r["s"]) for r in report.rows}
    if covered != {(n, s) for n in range(1, 15) for s in range(n)}:
        failures.append("not every (n, s) was checked")
    finish(7, "vanishing-ones parts a-d for n<=14, all s", failures, time.perf_counter() - t0, 120)


def test_criterion_08_sequences():
    t0 = time.perf_counter()
    seq = boundary_sequences(64, cross_check_upto=4)
    report = check_monotone_identity(seq)
    table = check_printed_corollary_6_3(seq)
    elapsed = time.perf_counter() - t0
    failures = [f"s={r['s']}: {r['check']}" for r in report.failures()]
    if len(seq) != 64 or sorted(seq.full_L) != [1, 2, 3, 4]:
        failures.append("sequence length or dual-path range wrong")
    if len(table.rows) != 64 or "derived_holds" not in table.to_csv().splitlines()[0]:
        failures.append("comparison table incomplete")
    print(table.to_csv().splitlines()[0])
    for row in table.to_csv().splitlines()[1:4]:
        print(row)
    finish(8, "L_s, B_s sequences to s=64 and the comparison table", failures, elapsed, 10)


def test_criterion_09_symmetry():
    rng = random.Random(9)
    t0 = time.perf_counter()
    failures = []
    preserved = True
    for n in range(1, 11):
        for g in reduced_family(n):
            for name, pred in (("vertical", is_vertically_symmetric),
                               ("rotational", is_rotationally_symmetric),
                               ("slide", is_slide_symmetric)):
                if not pred(g):
                    preserved = False
                    failures.append(f"T({n},{g.n}) not {name}ly symmetric")
    # random symmetric grids and one-edge perturbations of them
    grids = []
    for i in range(500):
        g = random_symmetric_grid(rng, rng.randint(1, 7), hi=5)
        if i % 2:
            ref = rng.choice(list(iter_edges(g.n)))
            g = set_edge(g, ref, g[ref] + 1)
        grids.append(g)
    for g in grids:
        v = is_vertically_symmetric(g)
        lhs = v and is_slide_symmetric(g)
        rhs = v and is_rotationally_symmetric(g)
        if lhs != rhs:
            failures.append(f"n={g.n}: vertical+slide={lhs}, vertical+rotational={rhs}")
    if failures and preserved:
        failures.insert(0, "preservation holds for every T(n,m); equivalence fails")
    finish(9, "symmetry preservation n<=10 and vertical+slide <=> vertical+rotational",
           failures, time.perf_counter() - t0, 10)


def test_criterion_10_asymptotics():
    t0 = time.perf_counter()
    report = asymptotics_report(14)
    verdict, diffs = e_n_differences_shrink(4, 14)
    elapsed = time.perf_counter() - t0
    failures = []
    for r in report.rows:
        if r["abs_e_n_minus_3_over_2e"] != abs(float(r["e_n"]) - THREE_OVER_2E):
            failures.append(f"n={r['n']}: distance column wrong")
    for n, r in zip(range(1, 15), report.rows):
        print(f"n={n:2d} e_n={float(r['e_n']):.9f} |e_n-3/(2e)|={r['abs_e_n_minus_3_over_2e']:.3e}")
    if not verdict:
        grows = [f"|e_{n + 2}-e_{n + 1}|={float(b):.6f} >= |e_{n + 1}-e_{n}|={float(a):.6f}"
                 for n, (a, b) in zip(range(4, 14), zip(diffs, diffs[1:])) if b >= a]
        failures.append("differences do not shrink strictly: " + "; ".join(grows))
    finish(10, "|e_{n+1}-e_n| strictly shrinking for n=4..14", failures, elapsed, 60)
