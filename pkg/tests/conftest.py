import sys
from pathlib import Path

import pytest

from ivfgraph import read_graph

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent / "fixtures"

ACCEPTANCE_RESULTS: list[tuple[str, bool, str]] = []


@pytest.fixture
def fixtures_dir():
    return FIXTURES


@pytest.fixture
def example26():
    return read_graph(FIXTURES / "example26.ivfg")


@pytest.fixture
def record_criterion():
    def record(label, passed, detail=""):
        ACCEPTANCE_RESULTS.append((label, passed, detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, passed, detail in ACCEPTANCE_RESULTS:
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] {label}: {detail}")
