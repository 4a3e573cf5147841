import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

_CRITERIA = {}


@pytest.fixture
def criterion():
    """Record the outcome of one acceptance criterion, then assert it."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        _CRITERIA[number] = (title, bool(ok), detail)
        assert ok, f"criterion {number} ({title}) failed: {detail}"

    return record


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, ok, detail = _CRITERIA[number]
        mark = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"[{mark}] {number:2d}. {title}: {detail}")
    passed = sum(ok for _, ok, _ in _CRITERIA.values())
    terminalreporter.write_line(f"{passed}/{len(_CRITERIA)} criteria pass")
