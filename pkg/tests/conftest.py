import os
import sys
import threading

import pytest

from mertens_ap.constants import compute_all
from mertens_ap.mp import PrecisionContext

sys.path.insert(0, os.path.dirname(__file__))

_RUNS = {}
_LOCK = threading.Lock()

# one line per acceptance criterion, printed in the terminal summary
ACCEPTANCE_LINES = []


def records_for(q, digits=100, kinds=("M", "B", "C")):
    """Computed records for one modulus, memoised for the whole session."""
    key = (q, digits, kinds)
    with _LOCK:
        if key not in _RUNS:
            _RUNS[key] = compute_all(q, kinds=kinds, ctx=PrecisionContext(digits))
        return _RUNS[key]


@pytest.fixture(scope="session")
def ctx100():
    return PrecisionContext(100)


@pytest.fixture(scope="session")
def ctx30():
    return PrecisionContext(30)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE_LINES, key=lambda s: s.split("criterion ")[1]):
        terminalreporter.write_line(line)
