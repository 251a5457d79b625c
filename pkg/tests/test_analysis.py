import json
from fractions import Fraction as F

import pytest

from trigrid.analysis import (
    THREE_OVER_2E,
    EdgeClass,
    asymptotic_row,
    asymptotics_report,
    boundary_sequences,
    center_recurrence,
    check_monotone_identity,
    check_printed_corollary_6_3,
    check_uniform_center,
    check_vanishing_ones,
    classify_edges,
    e_n_differences_shrink,
    gcd_scan,
    gcd_summary,
    ones_limit,
    reduced_family,
    successive_differences,
)
from trigrid.grid import GridError
from trigrid.reduction import corner_resistance


@pytest.fixture(scope="module")
def seq():
    return boundary_sequences(8)


def test_sequence_examples(seq):
    assert seq.L[:4] == (F(2, 3), F(1, 2), F(13, 32), F(89, 256))
    assert seq.B[:4] == (F(1), F(13, 12), F(1157, 960), F(224369, 167424))
    assert seq.agrees


def test_recurrence_state_shapes():
    states = center_recurrence(5)
    assert states[0] == [(F(2, 3), 1, 1)]
    assert [len(s) for s in states] == [1, 2, 3, 3, 2]
    with pytest.raises(GridError):
        center_recurrence(0)


def test_monotone_identity_report(seq):
    report = check_monotone_identity(seq)
    assert report.ok and report.all_passed
    checks = {r["check"] for r in report.rows}
    assert "L_{s+1} L_s = 2 B_s (L_s - L_{s+1})" in checks


def test_monotone_report_flags_tampering(seq):
    bad = type(seq)(seq.L[:2] + (F(1, 1),) + seq.L[3:], seq.B, seq.base, {}, {})
    report = check_monotone_identity(bad)
    assert not report.ok
    assert any(r["check"] == "L_s < 1" and r["s"] == 3 for r in report.failures())


def test_corollary_table(seq):
    report = check_printed_corollary_6_3(seq)
    rows = report.rows
    assert rows[0]["s"] == 0 and rows[0]["printed_holds"]
    assert not any(r["printed_holds"] for r in rows[1:])
    assert all(r["derived_holds"] for r in rows[1:])
    assert "printed_form" in report.to_csv().splitlines()[0]


def test_gcd_table(seq):
    report = gcd_scan(6, seq=seq)
    assert len(report.rows) == 5 * 5
    assert report.ok
    summary = gcd_summary(report)
    assert set(summary) == {"L_s,L_s+1", "L_s,B_s", "B_s,B_s+1", "L_s,B_s+1", "B_s,L_s+1"}
    for hits, total, first in summary.values():
        assert total == 5 and 0 <= hits <= total
    with pytest.raises(GridError):
        gcd_scan(1)


def test_report_serialization_is_deterministic():
    a = check_uniform_center(8, 2)
    b = check_uniform_center(8, 2)
    assert a.to_csv() == b.to_csv()
    data = json.loads(a.to_json())
    assert data["ok"] is True and data["rows"][0]["passed"] == "true"


def test_uniform_center_small():
    report = check_uniform_center(4, 1)
    assert [r["part"] for r in report.rows] == ["a", "b", "c"]
    assert report.ok
    with pytest.raises(GridError):
        check_uniform_center(7, 2)


def test_vanishing_ones_rows():
    report = check_vanishing_ones(8)
    parts = [(r["s"], r["part"]) for r in report.rows]
    assert parts[0] == (0, "a")
    assert ones_limit(8) == 2
    assert (1, "b") in parts and (2, "c") in parts and (3, "d") in parts
    assert report.all_passed


def test_literal_rims_reading_fails_at_first_reduction():
    report = check_vanishing_ones(5, literal_rims=True)
    row = next(r for r in report.rows if r["s"] == 1 and r["part"] == "c")
    assert row["passed"] is False and row["counterexample"].endswith("=2/3")
    assert report.ok


def test_classify_edges():
    cls = classify_edges(6, 1)
    assert cls[(1, 1, 1)].actual is EdgeClass.LESS_THAN_ONE
    assert all(c.agrees for c in cls.values())
    assert EdgeClass.NOT_ONE.admits(EdgeClass.GREATER_THAN_ONE)
    assert not EdgeClass.NOT_ONE.admits(EdgeClass.EQUAL_ONE)


def test_reduced_family():
    fam = reduced_family(5)
    assert [g.n for g in fam] == [5, 4, 3, 2, 1]


def test_asymptotic_row_consistency():
    row = asymptotic_row(6)
    assert row.r_n == corner_resistance(6)
    assert row.tail_ratios[0] == 1
    report = asymptotics_report(5)
    assert [r["n"] for r in report.rows] == [1, 2, 3, 4, 5]
    assert report.rows[-1]["exp_diff"] is None
    assert report.rows[0]["abs_e_n_minus_3_over_2e"] == pytest.approx(
        abs(float(report.rows[0]["e_n"]) - THREE_OVER_2E))


def test_successive_differences():
    assert successive_differences([F(1), F(3), F(2)]) == [2, 1]
    verdict, diffs = e_n_differences_shrink(6, 10)
    assert verdict and len(diffs) == 4
