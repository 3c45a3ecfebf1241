"""Shared test plumbing.

The acceptance tests register one human-readable line per criterion; the
terminal-summary hook replays them at the end of the run so the pass/fail
status of every criterion is visible regardless of capture settings.
"""

ACCEPTANCE_LINES: list[str] = []


def record_criterion(line: str) -> None:
    ACCEPTANCE_LINES.append(line)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in ACCEPTANCE_LINES:
        terminalreporter.write_line(line)
