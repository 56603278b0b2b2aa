"""
Journeys (time-respecting paths) in a zero-latency time-varying graph.
"""
import heapq
from typing import Dict, Optional

from .errors import UnknownNodeError
from .timeline import TimeInstant, check_instant
from .tvg import NodeId, TimeVaryingGraph


def earliest_arrival(g: TimeVaryingGraph, source: NodeId,
                     start: Optional[TimeInstant] = None) -> Dict[NodeId, TimeInstant]:
    """
    Foremost arrival date of every node reachable from ``source``.

    Edges are crossed instantly and a journey may wait at a node for as long
    as it likes, so the earliest arrival at a node dominates every later one.

    Args:
        g: Time-varying graph
        source: Departure node
        start: Earliest departure date; the lifetime start if omitted

    Returns:
        Mapping of reachable node -> earliest arrival date (source included)
    """
    if not g.has_node(source):
        raise UnknownNodeError(f"node {source!r} is not recorded")
    start = g.lifetime.start if start is None else check_instant(start)

    arrival = {source: start}
    queue = [(start, source)]
    while queue:
        t, node = heapq.heappop(queue)
        if t > arrival[node]:
            continue
        for neighbor in g.neighbors(node):
            crossing = g.edge(node, neighbor).availability.next_present(t)
            if crossing is None:
                continue
            if crossing < arrival.get(neighbor, crossing + 1):
                arrival[neighbor] = crossing
                heapq.heappush(queue, (crossing, neighbor))
    return arrival


def journey_exists(g: TimeVaryingGraph, source: NodeId, target: NodeId,
                   start: Optional[TimeInstant] = None) -> bool:
    """
    Whether a journey leads from ``source`` to ``target`` departing at or after ``start``.

    Raises:
        UnknownNodeError: If either node is not recorded
    """
    if not g.has_node(target):
        raise UnknownNodeError(f"node {target!r} is not recorded")
    if source == target:
        return True
    return target in earliest_arrival(g, source, start)


def is_temporally_connected(g: TimeVaryingGraph, start: Optional[TimeInstant] = None) -> bool:
    """Whether every ordered pair of nodes is joined by a journey."""
    nodes = list(g.nodes)
    return all(len(earliest_arrival(g, node, start)) == len(nodes) for node in nodes)
