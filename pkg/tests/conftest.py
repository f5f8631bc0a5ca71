import os
import time

import pytest

from hrcn import ball, enumeration

SURVEY_MS = (3, 5, 7, 9, 11)
ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def _precision():
    ball.set_precision(128)


@pytest.fixture(scope="session")
def catalog():
    return enumeration.load_catalog()


@pytest.fixture(scope="session")
def extensions(catalog):
    return enumeration.extensions_by_m(SURVEY_MS, catalog, 16)


@pytest.fixture(scope="session")
def all_results(extensions):
    """Every enumerated extension's result per m, computed once per session, with wall time."""
    jobs = os.cpu_count() or 1
    start = time.perf_counter()
    out = {m: enumeration.survey_rows(extensions[m], m, jobs=jobs) for m in SURVEY_MS}
    return out, time.perf_counter() - start


@pytest.fixture(scope="session")
def survey_rows(all_results):
    """Results with h_low <= 32, sorted as the CLI sorts them."""
    res, _ = all_results
    return {m: sorted((r for r in rows if r.h_low <= 32), key=enumeration.result_key) for m, rows in res.items()}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
