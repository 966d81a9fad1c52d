"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line."""

import pytest

from sl2shares.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number, engine, capsys):
    result = run_criterion(number, engine)
    with capsys.disabled():
        print("\n" + result.line)
    assert result.passed, result.detail
