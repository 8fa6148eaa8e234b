import sys

# one line per acceptance criterion, filled by test_acceptance.py
ACCEPTANCE: list[str] = []

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10_000))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(ACCEPTANCE, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
