from functools import lru_cache

import pytest
from hypothesis import strategies as st

from cyctab.shape import enumerate_shapes, is_connected_ribbon
from cyctab.tableau import Tableau

# criterion key ("5", "5b", ...) -> (status, detail); filled in by test_acceptance
ACCEPTANCE: dict[str, tuple[str, str]] = {}


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run slow exhaustive tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive runs, enabled with --runslow")
    config.addinivalue_line("markers", "criterion(key): acceptance criterion reported in the summary")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
            mark = item.get_closest_marker("criterion")
            if mark:
                ACCEPTANCE[mark.args[0]] = ("SKIP", "needs --runslow")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE, key=lambda k: (int(k.rstrip("abc")), k)):
        status, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:>3}: {status}  {detail}")


def shapes_upto(n, non_ribbon=False):
    out = []
    for m in range(1, n + 1):
        for s in enumerate_shapes(m):
            if non_ribbon and is_connected_ribbon(s):
                continue
            out.append(s)
    return out


@lru_cache(maxsize=None)
def _pool(n, non_ribbon):
    return tuple(enumerate_shapes(n, "non-ribbon" if non_ribbon else "all"))


@st.composite
def tableaux(draw, min_n=1, max_n=9, non_ribbon=False):
    """A random standard tableau: random shape, then entries 1..n placed one addable cell at a time."""
    n = draw(st.integers(min_n, max_n))
    shape = draw(st.sampled_from(_pool(n, non_ribbon)))
    ent = {}
    free = set(shape.cells)
    for v in range(1, n + 1):
        addable = sorted(
            c for c in free
            if ((c[0] - 1, c[1]) not in free) and ((c[0], c[1] - 1) not in free)
        )
        cell = draw(st.sampled_from(addable))
        ent[cell] = v
        free.discard(cell)
    return Tableau(shape, ent)
