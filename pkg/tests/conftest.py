from __future__ import annotations

import os
import sys

sys.path.insert(0, os.path.dirname(__file__))


_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    path, _, name = report.nodeid.partition("::")
    if not path.endswith("test_acceptance.py") or not name.startswith("test_criterion_"):
        return
    number = int(name.split("_")[2])
    if report.failed:
        _criteria[number] = "FAIL"
    elif report.when == "call":
        _criteria.setdefault(number, "PASS")


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_criteria):
        terminalreporter.write_line(f"criterion {number:2d}: {_criteria[number]}")
