"""
Pytest configuration and shared fixtures for tvgnet tests.
"""
import logging
import os
import random
import shutil
import tempfile
from pathlib import Path

import networkx as nx
import pytest

from tvgnet.core.timeline import Interval
from tvgnet.core.tvg import TimeVaryingGraph

FIXTURES_DIR = Path(__file__).parent / "fixtures"
CORPUS12_DIR = FIXTURES_DIR / "corpus12"


@pytest.fixture
def temp_dir():
    """Create a temporary directory for tests."""
    temp_dir = tempfile.mkdtemp()
    yield temp_dir
    shutil.rmtree(temp_dir, ignore_errors=True)


@pytest.fixture
def corpus12_dir():
    """Directory of the hand-checked 12-paper corpus."""
    return CORPUS12_DIR


@pytest.fixture
def relay_tvg():
    """Four nodes, a-b and c-d present at 0, b-c present at 2."""
    return make_relay_tvg()


@pytest.fixture
def graph_factory():
    """Build a TVG from (u, v, start, end) tuples."""
    return make_tvg


@pytest.fixture(autouse=True)
def setup_test_environment(monkeypatch):
    """Keep TVGNET_* variables from the caller's shell out of the tests."""
    for name in list(os.environ):
        if name.startswith("TVGNET_") and name != "TVGNET_HEPTH_DIR":
            monkeypatch.delenv(name, raising=False)


@pytest.fixture(autouse=True)
def reset_root_handlers():
    """Drop handlers a CLI invocation attached to the root logger."""
    root = logging.getLogger()
    before = list(root.handlers)
    level = root.level
    yield
    for handler in list(root.handlers):
        if handler not in before:
            root.removeHandler(handler)
            handler.close()
    root.setLevel(level)


@pytest.fixture
def isolated_filesystem():
    """Create an isolated filesystem for tests."""
    with tempfile.TemporaryDirectory() as temp_dir:
        original_cwd = os.getcwd()
        try:
            os.chdir(temp_dir)
            yield temp_dir
        finally:
            os.chdir(original_cwd)


# Test markers
def pytest_configure(config):
    """Configure pytest markers."""
    config.addinivalue_line(
        "markers", "integration: needs the hep-th dataset (set TVGNET_HEPTH_DIR)"
    )
    config.addinivalue_line(
        "markers", "slow: randomized property suites"
    )


def pytest_collection_modifyitems(config, items):
    """Mark integration tests and skip them when the dataset is not available."""
    skip_integration = pytest.mark.skip(reason="TVGNET_HEPTH_DIR is not set")
    for item in items:
        if "integration" in str(item.fspath):
            item.add_marker(pytest.mark.integration)
            if not os.environ.get("TVGNET_HEPTH_DIR"):
                item.add_marker(skip_integration)


# Helper functions for tests
def make_tvg(edges, lifetime=None, nodes=None):
    """
    Build a mutable TVG from (u, v, start, end) tuples.

    Nodes appear at the first start of their edges unless given in ``nodes``.
    """
    edges = list(edges)
    if lifetime is None:
        end = max([e[3] for e in edges] + [1])
        lifetime = Interval(0, end)
    g = TimeVaryingGraph(lifetime)
    appearances = dict(nodes or {})
    for u, v, start, _ in edges:
        for node in (u, v):
            appearances[node] = min(appearances.get(node, start), start)
    for node, appearance in sorted(appearances.items()):
        g.record_node(node, appearance)
    for u, v, start, end in edges:
        g.record_edge_presence(u, v, Interval(start, end))
    return g


def make_relay_tvg():
    g = make_tvg([("a", "b", 0, 1), ("b", "c", 2, 3), ("c", "d", 0, 1)],
                 lifetime=Interval(0, 3), nodes={"a": 0, "b": 0, "c": 0, "d": 0})
    return g.freeze()


def random_graph(rng: random.Random, max_nodes: int = 12, p: float = 0.3) -> nx.Graph:
    """Random simple graph with string node ids."""
    n = rng.randint(1, max_nodes)
    G = nx.gnp_random_graph(n, p, seed=rng.randint(0, 2**31 - 1))
    return nx.relabel_nodes(G, {i: f"n{i:02d}" for i in G.nodes})


def random_tvg(rng: random.Random, n_nodes: int = 6, max_edges: int = 10, horizon: int = 14,
               weighted: bool = False) -> TimeVaryingGraph:
    """Random TVG over [0, horizon) with short presence intervals and optional weight events."""
    nodes = [f"v{i}" for i in range(n_nodes)]
    edges = []
    for _ in range(rng.randint(1, max_edges)):
        u, v = rng.sample(nodes, 2)
        start = rng.randint(0, horizon - 4)
        edges.append((u, v, start, start + rng.randint(1, 3)))
    g = make_tvg(edges, lifetime=Interval(0, horizon))
    if weighted:
        for u, v in list(g.edges):
            for _ in range(rng.randint(0, 3)):
                g.add_weight_event(u, v, rng.randrange(horizon), rng.randint(1, 2))
    return g
