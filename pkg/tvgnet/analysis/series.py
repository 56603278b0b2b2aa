"""
Metric time series over snapshot sequences.
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

from ..core.snapshots import Snapshot, snapshot_sequence
from ..core.tvg import TimeVaryingGraph
from .community import louvain
from .metrics import (
    MetricRow,
    average_degree,
    clustering,
    connected_components,
    degree_histogram,
    density,
    edge_node_ratio,
    path_metrics,
    power_law_slope,
)

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def map_windows(func: Callable[[T], R], items: Sequence[T], workers: int = 1) -> List[R]:
    """
    Apply ``func`` to every item, in a thread pool when ``workers > 1``.

    Results keep the order of ``items``.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if workers == 1 or len(items) < 2:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers, thread_name_prefix="tvgnet-window") as executor:
        return list(executor.map(func, items))


def evaluate_snapshot(snapshot: Snapshot, resolution: float = 1.0, weighted: bool = False) -> MetricRow:
    """Compute every indicator of one snapshot."""
    G = snapshot.graph
    components, _ = connected_components(G)
    _, avg_clustering = clustering(G)
    avg_path_length, diameter = path_metrics(G)
    modularity = louvain(G, resolution, weighted).score if G.number_of_nodes() else None

    row = MetricRow(
        window=snapshot.window,
        nodes=G.number_of_nodes(),
        edges=G.number_of_edges(),
        components=components,
        density=density(G),
        avg_degree=average_degree(G),
        avg_clustering=avg_clustering,
        avg_path_length=avg_path_length,
        diameter=diameter,
        power_law_slope=power_law_slope(degree_histogram(G)),
        modularity=modularity,
        edge_node_ratio=edge_node_ratio(G),
    )
    logger.debug(f"Window {snapshot.window}: {row.nodes} nodes, {row.edges} edges")
    return row


def metric_series(g: TimeVaryingGraph, step: int = 365, resolution: float = 1.0,
                  cumulative: bool = True, weighted: bool = False,
                  persistent: bool = False, workers: int = 1) -> List[MetricRow]:
    """
    Indicators of every fixed-step snapshot of a graph.

    Args:
        g: Time-varying graph
        step: Window length in days
        resolution: Louvain resolution for the modularity column
        cumulative: Footprints over [lifetime start, window end)
        weighted: Weighted modularity
        persistent: Footprints of edges present over the whole span only
        workers: Threads evaluating windows concurrently

    Returns:
        Rows ordered by window
    """
    snapshots = snapshot_sequence(g, step=step, cumulative=cumulative, persistent=persistent)
    rows = map_windows(lambda s: evaluate_snapshot(s, resolution, weighted), snapshots, workers)
    logger.info(f"Evaluated {len(rows)} windows of {step} days",
                extra={"windows": len(rows), "cumulative": cumulative, "workers": workers})
    return rows
