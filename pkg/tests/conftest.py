import os

import pytest

from graph_core.graph import build_graph, build_query
from tests import worked_example

FIXTURES = os.path.join(os.path.dirname(__file__), "fixtures")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run scale-level tests")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixture_path():
    return lambda name: os.path.join(FIXTURES, name)


@pytest.fixture
def worked_query():
    return build_query(worked_example.QUERY_NODES, worked_example.QUERY_EDGES)


@pytest.fixture
def worked_graph():
    return build_graph(worked_example.GRAPH_NODES, worked_example.GRAPH_EDGES)
