import pytest

from ringforge import build_ring, parse_ring_spec

ACCEPTANCE_LINES = []


@pytest.fixture
def R():
    """Build a ring from its textual spec."""

    def make(text):
        return build_ring(parse_ring_spec(text))

    return make


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
