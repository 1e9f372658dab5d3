from fractions import Fraction

from hypothesis import strategies as st

rationals = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)
small_ints = st.integers(-3, 3).map(Fraction)


def coeff_vectors(max_degree=12, elements=None):
    """Coefficient lists of degree 1..max_degree; mixes generic and tie-heavy entries."""
    elements = elements or st.one_of(rationals, small_ints)
    return st.lists(elements, min_size=2, max_size=max_degree + 1)


def F(*vals):
    return [Fraction(v) for v in vals]


def brute_strict_vertices(x):
    """Index k is a strict lower-hull vertex iff it lies strictly below every chord over it."""
    n = len(x) - 1
    out = []
    for k in range(n + 1):
        ok = True
        for a in range(k):
            for b in range(k + 1, n + 1):
                chord = x[a] + (x[b] - x[a]) * Fraction(k - a, b - a)
                if x[k] >= chord:
                    ok = False
        if ok:
            out.append(k)
    return out


# -- acceptance criterion reporting -----------------------------------------

import pytest

_criteria: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    num, title = marker.args
    if report.when == "call" or (report.when == "setup" and report.failed):
        _criteria[num] = ("PASS" if report.passed else "FAIL", title)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_criteria):
        status, title = _criteria[num]
        terminalreporter.write_line(f"[{status}] criterion {num}: {title}")
