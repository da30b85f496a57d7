import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

# one line per acceptance criterion, echoed after the run summary so the
# PASS/FAIL report survives output capture
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
