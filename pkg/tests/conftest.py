import sys

import pytest

from dyck2d import lab


@pytest.fixture(scope="session")
def fx():
    return lab.fixtures()


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        status, text = results[number]
        terminalreporter.write_line(f"[{status}] criterion {number}: {text}")
