import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
# the recursive listing oracle nests up to ~n frames on first-pivot inputs
sys.setrecursionlimit(max(sys.getrecursionlimit(), 20000))

_acceptance_lines = []


class Criterion:
    def __init__(self, number, title):
        self.number = number
        self.title = title
        self.detail = ""

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc, tb):
        status = "PASS" if exc_type is None else "FAIL"
        line = f"[{status}] criterion {self.number}: {self.title}"
        if self.detail:
            line += f" ({self.detail})"
        if exc_type is AssertionError and str(exc):
            line += f" -- {str(exc).splitlines()[0]}"
        _acceptance_lines.append((self.number, line))
        print(line)
        return False


@pytest.fixture
def criterion():
    return Criterion


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_acceptance_lines):
            terminalreporter.write_line(line)
