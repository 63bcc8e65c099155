import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from skewmccoy import build_ring  # noqa: E402
from skewmccoy.harness import catalog_generate  # noqa: E402

CATALOG = catalog_generate(8)


@pytest.fixture(scope="session")
def catalog_rings():
    return {spec: build_ring(spec) for spec in CATALOG}


# -- acceptance criteria summary ---------------------------------------------------
# Tests marked ``acceptance(n, title)`` feed one PASS/FAIL line per criterion,
# printed at the end of the run.

ACCEPTANCE: dict = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(n, title): numbered acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    mark = item.get_closest_marker("acceptance")
    if mark is None or not (rep.when == "call" or rep.failed or rep.skipped):
        return
    n, title = mark.args
    _, ok = ACCEPTANCE.get(n, (title, True))
    ACCEPTANCE[n] = (title, ok and rep.passed)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        title, ok = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n:>2}: {'PASS' if ok else 'FAIL'}  {title}")
