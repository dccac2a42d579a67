import random

import pytest
from hypothesis import strategies as st

from pennercert.intmatrix import from_rows


def matrices(max_n=5, max_entry=3, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(0, max_entry), min_size=n, max_size=n), min_size=n, max_size=n
        )
    ).map(from_rows)


def random_matrix(rng, n, max_entry, density=None):
    if density is None:
        density = rng.random()
    return from_rows(
        [[rng.randint(1, max_entry) if rng.random() < density else 0 for _ in range(n)] for _ in range(n)]
    )


@pytest.fixture
def rng():
    return random.Random(20241019)


@pytest.fixture
def fib():
    return from_rows([[0, 1], [1, 1]])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    setattr(item, "rep_" + rep.when, rep)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for status, name, detail in RESULTS:
        terminalreporter.write_line(f"[{status}] {name}" + (f"  ({detail})" if detail else ""))
