import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    def _record(number, title, ok, elapsed):
        ACCEPTANCE_LINES.append(
            f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  ({elapsed:6.2f}s)  {title}"
        )

    return _record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
