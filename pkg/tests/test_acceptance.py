"""The nine acceptance criteria at full size, each within its time budget.

Run directly (``python tests/test_acceptance.py``) for a plain PASS/FAIL
listing, or through pytest, which prints the same lines in its summary.
"""

import time

import pytest

from perfdiv.cli import render_results, verify_output
from perfdiv.verification import CHECKS

BUDGET_S = {"1": 1, "2": 120, "3": 600, "4": 300, "5": 60, "6": 1800, "7": 600, "8": 600, "9": 600}

_results = {}


def outcome(key):
    if key not in _results:
        started = time.perf_counter()
        res = CHECKS[key](False)
        _results[key] = (res, time.perf_counter() - started)
    return _results[key]


def summary_lines():
    out = []
    for key in CHECKS:
        if key in _results:
            res, secs = _results[key]
            within = secs < BUDGET_S[key]
            status = "PASS" if res.passed and within else "FAIL"
            out.append(f"[{status}] criterion {key}: {res.title} ({secs:.1f}s, budget {BUDGET_S[key]}s)")
    return out


@pytest.mark.parametrize("key", list(CHECKS))
def test_criterion(key):
    res, secs = outcome(key)
    print(res.line(), f"({secs:.1f}s)")
    for d in res.details:
        print("   ", d)
    assert res.passed, res.details
    assert secs < BUDGET_S[key], f"took {secs:.1f}s"


def test_verify_output_is_byte_identical():
    results = [outcome(key)[0] for key in CHECKS]
    text, ok = verify_output()
    assert ok
    assert text == render_results(results)


if __name__ == "__main__":
    for key in CHECKS:
        outcome(key)
    print("\n".join(summary_lines()))
