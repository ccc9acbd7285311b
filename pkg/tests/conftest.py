"""Shared pytest plumbing: collect acceptance lines for the run summary."""

import pytest

_lines: list[str] = []


@pytest.fixture
def acceptance_report():
    """Returns a reporter that prints one pass/fail line per criterion."""

    def report(number: int, name: str, passed: bool, detail: str = "") -> None:
        line = f"criterion {number} ({name}): {'pass' if passed else 'FAIL'}"
        if detail:
            line += f" -- {detail}"
        print(line)
        _lines.append(line)

    return report


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    # Re-emit the acceptance lines where output capturing cannot hide them.
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
