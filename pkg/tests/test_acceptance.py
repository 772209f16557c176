"""Acceptance suite: one test per criterion, each printing a single pass/fail line.

A criterion passes when every named check holds and the run stays inside its
time budget. Failing checks are listed by name, never relaxed.
"""
import pytest

from bwkit.checks import ACCEPTANCE, BUDGETS, criterion_9

CRITERIA = {c.number: c for c in ACCEPTANCE + (criterion_9,)}


def _line(r) -> str:
    budget = "no budget" if r.budget is None else f"budget {r.budget:g}s"
    failed = [name for name, ok in r.checks.items() if not ok]
    tail = f"  failed: {'; '.join(failed)}" if failed else ""
    if not r.within_budget:
        tail += "  (over time budget)"
    status = "PASS" if r.passed and r.within_budget else "FAIL"
    return f"criterion {r.number} [{r.title}]: {status} in {r.seconds:.2f}s ({budget}){tail}"


@pytest.mark.parametrize("number", sorted(CRITERIA), ids=lambda n: f"criterion_{n}")
def test_criterion(number, capsys):
    r = CRITERIA[number]()
    with capsys.disabled():
        print("\n" + _line(r))
    failed = [name for name, ok in r.checks.items() if not ok]
    assert not failed, f"criterion {number} failed checks: {failed}"
    assert r.within_budget, f"criterion {number} took {r.seconds:.2f}s, budget {BUDGETS[number]}s"
