import os

import hypothesis
import numpy as np
import pytest

from flowcentrality.config import FlowCentralityConfigurations
from flowcentrality.core.domain.graph import Graph
from flowcentrality.core.services.graphs import load_edge_list
from flowcentrality.core.services.verification import (
    complete_graph,
    cycle_graph,
    path_graph,
)

hypothesis.settings.register_profile("default", max_examples=50, deadline=None)
hypothesis.settings.register_profile("fast", max_examples=5, deadline=None)
hypothesis.settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "default"))


@pytest.fixture
def settings() -> FlowCentralityConfigurations:
    return FlowCentralityConfigurations()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20240917)


@pytest.fixture
def p3() -> Graph:
    """a - b - c"""
    return path_graph(3)


@pytest.fixture
def p5() -> Graph:
    return path_graph(5)


@pytest.fixture
def k3() -> Graph:
    return complete_graph(3)


@pytest.fixture
def k4() -> Graph:
    return complete_graph(4)


@pytest.fixture
def c4() -> Graph:
    """1 - 2 - 3 - 4 - 1"""
    return cycle_graph(4)


@pytest.fixture
def c5() -> Graph:
    return cycle_graph(5)


@pytest.fixture
def star() -> Graph:
    return load_edge_list("c,x\nc,y\nc,z\n")


@pytest.fixture
def self_loop() -> Graph:
    return load_edge_list("a,a\n")


@pytest.fixture
def two_cycle() -> Graph:
    return load_edge_list("a,b\nb,a\n", directed=True)


@pytest.fixture
def k3_directed() -> Graph:
    return Graph(labels=("a", "b", "c"), directed=True, adj=np.ones((3, 3)) - np.eye(3))
