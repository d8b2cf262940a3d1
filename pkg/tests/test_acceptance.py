"""Acceptance gate: the eight headline checks, one pass/fail line each.

Each criterion prints ``ACCEPTANCE <name>: PASS|FAIL (<seconds>s, limit
<limit>s) -- <detail>`` so the suite log doubles as the acceptance report.
A criterion fails when its check fails, when it raises, or when it runs
past its time limit.
"""

import time

import pytest

from noether.acceptance import CRITERIA


@pytest.mark.parametrize("name,func,limit",
                         CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance_criterion(name, func, limit, capsys):
    started = time.perf_counter()
    try:
        passed, detail = func()
    except Exception as exc:  # a crash is a failure with the reason
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - started
    if passed and seconds > limit:
        passed = False
        detail += f" (exceeded {limit:.0f} s limit)"
    verdict = "PASS" if passed else "FAIL"
    with capsys.disabled():  # the report line survives output capture
        print(f"\nACCEPTANCE {name}: {verdict} "
              f"({seconds:.1f}s, limit {limit:.0f}s) -- {detail}")
    assert passed, f"{name}: {detail}"
