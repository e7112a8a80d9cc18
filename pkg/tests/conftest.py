import os
import sys

sys.path.insert(0, os.path.dirname(__file__))

ACCEPTANCE = []


def record(criterion, ok, detail=""):
    ACCEPTANCE.append((criterion, ok, detail))
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in ACCEPTANCE:
        line = f"{'PASS' if ok else 'FAIL'}  {criterion}"
        if detail:
            line += f"  [{detail}]"
        terminalreporter.write_line(line)
