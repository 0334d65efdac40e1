"""One test per acceptance criterion; each prints its PASS/FAIL line.

Run with ``pytest -s tests/test_acceptance.py`` to see the lines, or use
``resurgence verify-suite`` for the same report from the command line.
"""
import pytest

from resurgence.acceptance import CRITERIA, run_criterion


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA],
                         ids=[f"{n:02d}-{name.replace(' ', '-')}" for n, name, _ in CRITERIA])
def test_criterion(number):
    result = run_criterion(number)
    print(result.line())
    assert result.passed, result.line()
