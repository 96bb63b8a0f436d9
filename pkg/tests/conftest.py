import pytest

_LINES = []


@pytest.fixture
def record():
    """Collect one summary line per acceptance criterion."""
    def add(number, ok, detail=""):
        _LINES.append((number, ok, detail))
        return ok
    return add


def _order(line):
    head, _, tail = str(line[0]).partition("-")
    return int(head), tail


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail in sorted(_LINES, key=_order):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {number}: {status}  {detail}".rstrip())
