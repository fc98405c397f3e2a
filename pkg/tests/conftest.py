import sys
from pathlib import Path

import numpy as np
import pytest
from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@st.composite
def labelings(draw, min_n=1, max_n=10, n=None):
    n = draw(st.integers(min_n, max_n)) if n is None else n
    k = draw(st.integers(1, n))
    return draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))


@st.composite
def labeling_pairs(draw, min_n=1, max_n=10):
    n = draw(st.integers(min_n, max_n))
    return draw(labelings(n=n)), draw(labelings(n=n))


@st.composite
def adjacency_matrices(draw, n):
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    A = np.zeros((n, n), dtype=bool)
    A[np.triu_indices(n, k=1)] = bits
    return A | A.T


# One summary line per acceptance criterion, in the terminal report.
_ACCEPTANCE = {}
_NOTES = []


@pytest.fixture
def emit():
    """Record a line to print under the acceptance summary."""
    return _NOTES.append


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.failed):
        return
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if not name.startswith("test_c"):
        return
    crit = name.split("_")[1]
    ok = report.passed
    _ACCEPTANCE.setdefault(crit, []).append((name, ok))


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for crit in sorted(_ACCEPTANCE, key=lambda c: int(c[1:])):
        results = _ACCEPTANCE[crit]
        status = "PASS" if all(ok for _, ok in results) else "FAIL"
        failed = [n for n, ok in results if not ok]
        extra = f"  (failing: {', '.join(failed)})" if failed else ""
        tr.write_line(f"criterion {crit[1:]:>2}: {status}  [{len(results)} checks]{extra}")
    for line in dict.fromkeys(_NOTES):
        tr.write_line(f"  {line}")
