import os

import pytest


def pytest_addoption(parser):
    parser.addoption("--long", action="store_true", default=False,
                     help="run the long exhaustive cases (also LCDBCH_LONG=1)")


@pytest.fixture(scope="session")
def long_mode(request):
    return request.config.getoption("--long") or os.environ.get("LCDBCH_LONG") == "1"


ACCEPTANCE_LINES = []


@pytest.fixture
def criterion(request):
    """record(ok, detail): one PASS/FAIL line per acceptance criterion."""
    def record(ok, detail):
        tag = request.node.name
        line = f"{'PASS' if ok else 'FAIL'} {tag}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
