from pathlib import Path

import pytest
from hypothesis import settings

from turanstab.graph import complete_graph, cycle_graph, petersen_graph

from .helpers import ACCEPTANCE_LOG

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture
def c5():
    return cycle_graph(5)


@pytest.fixture
def petersen():
    return petersen_graph()


@pytest.fixture
def k4():
    return complete_graph(4)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
