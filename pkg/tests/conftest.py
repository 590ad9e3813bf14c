import pytest

_CRITERIA_LINES: list[str] = []


@pytest.fixture
def criterion():
    """Record one acceptance line; ``check=False`` records without asserting."""

    def record(label, ok, detail="", check=True):
        line = f"[{'PASS' if ok else 'FAIL'}] {label}" + (f" -- {detail}" if detail else "")
        _CRITERIA_LINES.append(line)
        print(line)
        if check:
            assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if _CRITERIA_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _CRITERIA_LINES:
            terminalreporter.write_line(line)
