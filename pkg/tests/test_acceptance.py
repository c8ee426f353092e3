"""Acceptance criteria, one test per criterion, each printing a single PASS/FAIL line.

Every check is exact; the suites live in ``arrlab.verify`` so that
``arrlab verify <suite>`` reports the same rows.
"""

import pytest

from arrlab import verify as ver

CRITERIA = [(1, "eight-lines"), (2, "twenty-seven"), (3, "fermat-small"), (4, "ci-planar"),
            (5, "double-six"), (6, "steiner"), (7, "cube"), (8, "link-degree"), (9, "quartic-64"),
            (10, "nerve"), (11, "oracles")]


def report(capsys, res: ver.SuiteResult, status: str, note: str = "") -> None:
    with capsys.disabled():
        print(f"\nCRITERION {res.criterion:>2} {status:<14} {res.name}: {res.claim} "
              f"({len(res.rows)} rows, {res.seconds:.1f}s){note}")


@pytest.mark.parametrize("number,suite", CRITERIA, ids=[f"criterion-{n}-{s}" for n, s in CRITERIA])
def test_criterion(number, suite, capsys):
    res = ver.run_suite(suite)
    assert res.criterion == number
    unexpected = res.failures(include_known=False)
    known = [r for r in res.failures() if r.known]
    if not res.reproduced:
        report(capsys, res, ver.NOT_REPRODUCED)
        pytest.xfail("no admissible field in the scan: " + "; ".join(res.log))
    if unexpected:
        report(capsys, res, ver.FAIL)
        pytest.fail("\n".join(f"{r.check}: expected {r.expected!r}, computed {r.computed!r}" for r in unexpected))
    if known:
        report(capsys, res, ver.FAIL, f" [known: {len(known)} row(s)]")
        pytest.xfail("; ".join(f"{r.check}: {r.known}" for r in known))
    report(capsys, res, ver.PASS)
    assert res.rows
