from __future__ import annotations

import pytest

from graft_moments import (
    Graph,
    cycle_graph,
    diamond_graph,
    path_graph,
)


@pytest.fixture
def k1() -> Graph:
    return Graph([0], [])


@pytest.fixture
def k2() -> Graph:
    return path_graph(2)


@pytest.fixture
def p3() -> Graph:
    return path_graph(3)


@pytest.fixture
def p4() -> Graph:
    return path_graph(4)


@pytest.fixture
def c3() -> Graph:
    return cycle_graph(3)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def diamond() -> Graph:
    return diamond_graph()
