import pytest

from indpoly.graph import Graph, from_edge_list


@pytest.fixture
def p4() -> Graph:
    return from_edge_list(4, [(0, 1), (1, 2), (2, 3)])


def pytest_terminal_summary(terminalreporter):
    from . import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
