from importlib import resources

import pytest

from rlat.algebra import load_lattice
from rlat.modelgen import enumerate_lattices

FIXTURES = ("bool2", "bool4", "bool8", "ex44", "ex55", "idr")


def fixture(name):
    return load_lattice((resources.files("rlat") / "fixtures" / f"{name}.rlat").read_text())


def universe(max_order):
    out = []
    for n in range(2, max_order + 1):
        out.extend(enumerate_lattices(n))
    return out


@pytest.fixture(scope="session")
def fixtures():
    return {name: fixture(name) for name in FIXTURES}


@pytest.fixture(scope="session")
def ex44():
    return fixture("ex44")


@pytest.fixture(scope="session")
def ex55():
    return fixture("ex55")


@pytest.fixture(scope="session")
def idr():
    return fixture("idr")


@pytest.fixture(scope="session")
def small_universe():
    """Every class of order at most 4, plus the fixtures."""
    return universe(4) + [fixture(name) for name in FIXTURES]


# -- one summary line per acceptance criterion ------------------------------------

_CRITERIA = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, text): acceptance criterion checked by a test")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call" and not report.failed:
        return
    number, text = marker.args
    ok = report.passed and _CRITERIA.get(number, (True,))[0]
    _CRITERIA[number] = (ok, text)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA, key=int):
        ok, text = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {text}")
