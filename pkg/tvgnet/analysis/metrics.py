"""
Static-graph indicators.

All functions are pure over a networkx graph. A value that is undefined for
the given graph (density of a single node, slope of one point, ...) is
returned as ``None``, never as zero.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple

import networkx as nx
import numpy as np

from ..core.errors import InvariantViolation
from ..core.timeline import Interval
from ..core.tvg import NodeId, StaticGraph


@dataclass(frozen=True)
class StructuralIndices:
    """Cyclomatic number and the alpha, beta and gamma connectivity indices."""
    cyclomatic: int
    alpha: Optional[float]
    beta: Optional[float]
    gamma: Optional[float]


@dataclass(frozen=True)
class MetricRow:
    """Indicators of one snapshot."""
    window: Interval
    nodes: int
    edges: int
    components: int
    density: Optional[float] = None
    avg_degree: Optional[float] = None
    avg_clustering: Optional[float] = None
    avg_path_length: Optional[float] = None
    diameter: Optional[int] = None
    power_law_slope: Optional[float] = None
    modularity: Optional[float] = None
    edge_node_ratio: Optional[float] = None


def density(G: StaticGraph) -> Optional[float]:
    """2E / (V(V-1)); None for fewer than two nodes."""
    if G.number_of_nodes() < 2:
        return None
    return nx.density(G)


def average_degree(G: StaticGraph) -> Optional[float]:
    """2E / V; None for the empty graph."""
    n = G.number_of_nodes()
    if n == 0:
        return None
    return 2 * G.number_of_edges() / n


def edge_node_ratio(G: StaticGraph) -> Optional[float]:
    """E / V; None for the empty graph."""
    n = G.number_of_nodes()
    if n == 0:
        return None
    return G.number_of_edges() / n


def clustering(G: StaticGraph) -> Tuple[Dict[NodeId, float], Optional[float]]:
    """
    Local clustering coefficients and their average over all nodes.

    Nodes of degree below two have coefficient 0 and count in the average.

    Returns:
        (node -> coefficient, average), the average being None for the empty graph
    """
    per_node = nx.clustering(G)
    per_node = {node: float(per_node[node]) for node in sorted(per_node)}
    if not per_node:
        return per_node, None
    return per_node, sum(per_node.values()) / len(per_node)


def path_metrics(G: StaticGraph) -> Tuple[Optional[float], Optional[int]]:
    """
    Average shortest path length and diameter in unweighted hops.

    Both are taken over ordered pairs (u, v), u != v, joined by a path;
    unreachable pairs are left out.

    Returns:
        (average, diameter), both None when no pair is reachable
    """
    total = pairs = 0
    diameter = 0
    for _, lengths in nx.all_pairs_shortest_path_length(G):
        for distance in lengths.values():
            if distance == 0:
                continue
            total += distance
            pairs += 1
            diameter = max(diameter, distance)
    if pairs == 0:
        return None, None
    return total / pairs, diameter


def degree_histogram(G: StaticGraph) -> Dict[int, int]:
    """Number of nodes per degree, for degrees >= 1."""
    counts = Counter(degree for _, degree in G.degree() if degree >= 1)
    return dict(sorted(counts.items()))


def power_law_slope(histogram: Mapping[int, int]) -> Optional[float]:
    """
    Least-squares slope of log10(count) against log10(degree).

    Degrees below one and zero counts are ignored.

    Returns:
        Slope, or None with fewer than two distinct degrees
    """
    points = sorted((degree, count) for degree, count in histogram.items()
                    if degree >= 1 and count > 0)
    if len(points) < 2:
        return None
    x = np.log10([degree for degree, _ in points])
    y = np.log10([count for _, count in points])
    slope, _ = np.polyfit(x, y, 1)
    return float(slope)


def connected_components(G: StaticGraph) -> Tuple[int, Dict[NodeId, NodeId]]:
    """
    Connected components labelled by their smallest node id.

    Returns:
        (number of components, node -> label)
    """
    labels: Dict[NodeId, NodeId] = {}
    count = 0
    for component in nx.connected_components(G):
        label = min(component)
        for node in component:
            labels[node] = label
        count += 1
    return count, dict(sorted(labels.items()))


def structural_indices_from_counts(vertices: int, edges: int, components: int) -> StructuralIndices:
    """
    Structural indices from vertex, edge and component counts.

    cyclomatic = E - V + P, beta = E / V, gamma = 100 E / (3 (V - 2)) and
    alpha = cyclomatic / ((V - 1)(V - 2) / 2). Gamma and alpha need three
    vertices or more.

    Raises:
        InvariantViolation: If the counts give a negative cyclomatic number
    """
    cyclomatic = edges - vertices + components
    if cyclomatic < 0:
        raise InvariantViolation(
            f"cyclomatic number {cyclomatic} < 0 for V={vertices}, E={edges}, P={components}")
    beta = edges / vertices if vertices > 0 else None
    if vertices < 3:
        return StructuralIndices(cyclomatic, None, beta, None)
    gamma = 100 * edges / (3 * (vertices - 2))
    alpha = cyclomatic / ((vertices - 1) * (vertices - 2) / 2)
    return StructuralIndices(cyclomatic, alpha, beta, gamma)


def structural_indices(G: StaticGraph) -> StructuralIndices:
    """Structural indices of a graph."""
    return structural_indices_from_counts(
        G.number_of_nodes(), G.number_of_edges(), nx.number_connected_components(G))

