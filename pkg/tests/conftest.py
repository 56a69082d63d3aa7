import sys

import pytest

from pdbg.core import make_graph


@pytest.fixture
def digon():
    """Two vertices (a,b) and (b,a) joined both ways."""
    return make_graph(1, "ab", [("p", "a", "b"), ("q", "b", "a")], [("p", "q"), ("q", "p")])


@pytest.fixture
def single_loop():
    return make_graph(1, "a", [("v", "a", "a")], [("v", "v")])


def pytest_terminal_summary(terminalreporter):
    lines = [line for name, mod in list(sys.modules.items())
             if name.rsplit(".", 1)[-1] == "test_acceptance"
             for line in getattr(mod, "REPORTED", ())]
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
