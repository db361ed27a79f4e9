import os

import pytest

from cyclocode._accel import backend

SUMMARY: list[str] = []


def pytest_report_header(config):
    return f"cyclocode kernels: {backend()}"


def pytest_collection_modifyitems(config, items):
    if os.environ.get("CYCLOCODE_EXTENDED"):
        return
    skip = pytest.mark.skip(reason="set CYCLOCODE_EXTENDED=1 to run")
    for item in items:
        if "extended" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in SUMMARY:
            terminalreporter.write_line(line)
