import sys

import pytest

from hexavoid.verify import Workspace


@pytest.fixture(scope="session")
def ws10():
    """Oracle levels 1..10 for all three families, shared across modules."""
    return Workspace(10)


def pytest_terminal_summary(terminalreporter):
    mod = next((m for name, m in sys.modules.items() if name.endswith("test_acceptance")), None)
    results = getattr(mod, "RESULTS", None)
    if results:
        terminalreporter.section("acceptance criteria")
        for number in sorted(results):
            terminalreporter.write_line(results[number])
