import pytest

from helpers import cycle_graph, path_graph


@pytest.fixture
def p7():
    return path_graph(7)


@pytest.fixture
def c8():
    return cycle_graph(8)
