import pytest

_LINES: list = []


@pytest.fixture
def criterion():
    """Record one pass/fail line per acceptance criterion; assert afterwards."""

    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number:>2} [{'PASS' if ok else 'FAIL'}] {title} (tolerance: exact)"
        if detail:
            line += f" :: {detail}"
        _LINES.append((number, line))
        print(line)
        assert ok, line

    return record


def pytest_terminal_summary(terminalreporter):
    if not _LINES:
        return
    terminalreporter.section("acceptance criteria")
    for _, line in sorted(_LINES):
        terminalreporter.write_line(line)
