import sys

import pytest
from hypothesis import settings

from perfdiv.generators import enumerate_up_to

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture(scope="session")
def small_graphs():
    """All graphs on at most six vertices."""
    return list(enumerate_up_to(6))


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance._results:
        return
    terminalreporter.section("acceptance criteria")
    for line in acceptance.summary_lines():
        terminalreporter.write_line(line)
