"""
Time-varying graph model for tvgnet.

Nodes and undirected edges over a discrete lifetime. An edge is present at
an instant when the instant lies in its availability multi-interval;
crossing an edge takes no time.
"""
import bisect
import logging
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Iterator, List, Mapping, NamedTuple, Optional, Tuple

import networkx as nx

from .errors import (
    FrozenGraphError,
    InvalidWeightError,
    MissingEdgeError,
    OutOfLifetimeError,
    SelfLoopError,
    UnknownNodeError,
)
from .timeline import Interval, MultiInterval, TimeInstant, check_instant

logger = logging.getLogger(__name__)

NodeId = str
EdgeKey = Tuple[NodeId, NodeId]

# Flattened footprint of a TVG; nodes carry ``appearance``, edges ``weight``.
StaticGraph = nx.Graph


def edge_key(u: NodeId, v: NodeId) -> EdgeKey:
    """
    Canonical key of the unordered pair {u, v}.

    Raises:
        SelfLoopError: If u == v
    """
    if u == v:
        raise SelfLoopError(f"self-loop on node {u!r} is not allowed")
    return (u, v) if u < v else (v, u)


class EdgeDates(NamedTuple):
    """Appearance, disappearance and characteristic dates of an edge."""
    appearances: Tuple[TimeInstant, ...]
    disappearances: Tuple[TimeInstant, ...]
    characteristic: Tuple[TimeInstant, ...]


@dataclass
class EdgeRecord:
    """Availability and weight history of one edge."""
    availability: MultiInterval = field(default_factory=MultiInterval)
    # (time, delta) pairs sorted by time, one entry per distinct time
    weight_events: List[Tuple[TimeInstant, int]] = field(default_factory=list)

    def add_event(self, t: TimeInstant, delta: int) -> None:
        """Add ``delta`` to the weight step function at ``t``."""
        index = bisect.bisect_left(self.weight_events, (t, 0))
        if index < len(self.weight_events) and self.weight_events[index][0] == t:
            self.weight_events[index] = (t, self.weight_events[index][1] + delta)
        else:
            self.weight_events.insert(index, (t, delta))

    def weight_at(self, t: TimeInstant) -> int:
        """Cumulative weight including events at ``t``."""
        index = bisect.bisect_left(self.weight_events, (t + 1, 0))
        return sum(delta for _, delta in self.weight_events[:index])

    def weight_before(self, t: TimeInstant) -> int:
        """Cumulative weight of events strictly before ``t``."""
        index = bisect.bisect_left(self.weight_events, (t, 0))
        return sum(delta for _, delta in self.weight_events[:index])

    @property
    def total_weight(self) -> int:
        return sum(delta for _, delta in self.weight_events)

    def copy(self) -> "EdgeRecord":
        return EdgeRecord(self.availability.copy(), list(self.weight_events))


class TimeVaryingGraph:
    """
    Undirected time-varying graph with zero latency.

    Built by a single writer through ``record_node``, ``record_edge_presence``
    and ``add_weight_event``; ``freeze`` turns it into an immutable value that
    can be shared between readers.
    """

    def __init__(self, lifetime: Interval):
        """
        Create an empty graph.

        Args:
            lifetime: Half-open lifetime of the system
        """
        if not isinstance(lifetime, Interval):
            raise TypeError(f"lifetime must be an Interval, got {type(lifetime).__name__}")
        self.lifetime = lifetime
        self._nodes: Dict[NodeId, TimeInstant] = {}
        self._edges: Dict[EdgeKey, EdgeRecord] = {}
        self._adjacency: Dict[NodeId, set] = {}
        self._frozen = False

    def __repr__(self) -> str:
        return (f"TimeVaryingGraph(lifetime={self.lifetime}, "
                f"nodes={len(self._nodes)}, edges={len(self._edges)})")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TimeVaryingGraph):
            return NotImplemented
        return (self.lifetime == other.lifetime
                and self._nodes == other._nodes
                and self._edges == other._edges)

    # Structure

    @property
    def frozen(self) -> bool:
        return self._frozen

    @property
    def nodes(self) -> Mapping[NodeId, TimeInstant]:
        """Read-only view of node id -> appearance."""
        return MappingProxyType(self._nodes)

    @property
    def edges(self) -> Mapping[EdgeKey, EdgeRecord]:
        """Read-only view of edge key -> record."""
        return MappingProxyType(self._edges)

    def number_of_nodes(self) -> int:
        return len(self._nodes)

    def number_of_edges(self) -> int:
        return len(self._edges)

    def has_node(self, node: NodeId) -> bool:
        return node in self._nodes

    def has_edge(self, u: NodeId, v: NodeId) -> bool:
        return u != v and edge_key(u, v) in self._edges

    def neighbors(self, node: NodeId) -> Iterator[NodeId]:
        self._require_node(node)
        return iter(sorted(self._adjacency[node]))

    def edge(self, u: NodeId, v: NodeId) -> EdgeRecord:
        """
        Record of the edge {u, v}.

        Raises:
            MissingEdgeError: If the edge was never recorded
        """
        key = edge_key(u, v)
        try:
            return self._edges[key]
        except KeyError:
            raise MissingEdgeError(f"edge {key[0]!r}-{key[1]!r} is not recorded") from None

    def latency(self, u: NodeId, v: NodeId, t: TimeInstant) -> int:
        """Crossing time of an edge; always zero."""
        return 0

    def freeze(self) -> "TimeVaryingGraph":
        """Make the graph immutable and return it."""
        self._frozen = True
        return self

    def copy(self) -> "TimeVaryingGraph":
        """Mutable deep copy."""
        clone = TimeVaryingGraph(self.lifetime)
        clone._nodes = dict(self._nodes)
        clone._edges = {key: record.copy() for key, record in self._edges.items()}
        clone._adjacency = {node: set(adj) for node, adj in self._adjacency.items()}
        return clone

    # Construction

    def record_node(self, node: NodeId, appearance: TimeInstant) -> "TimeVaryingGraph":
        """
        Record a node, keeping the earliest appearance seen so far.

        Raises:
            OutOfLifetimeError: If appearance is outside the lifetime
        """
        self._check_mutable()
        self._check_in_lifetime(appearance)
        current = self._nodes.get(node)
        if current is None:
            self._nodes[node] = appearance
            self._adjacency[node] = set()
        elif appearance < current:
            self._nodes[node] = appearance
        return self

    def record_edge_presence(self, u: NodeId, v: NodeId, interval: Interval) -> "TimeVaryingGraph":
        """
        Merge an availability interval into the edge {u, v}.

        Endpoint appearances are pulled back to ``interval.start`` when the
        edge would otherwise predate a node.

        Raises:
            SelfLoopError: If u == v
            UnknownNodeError: If an endpoint is not recorded
            OutOfLifetimeError: If the interval is not inside the lifetime
        """
        self._check_mutable()
        key = edge_key(u, v)
        self._require_node(u)
        self._require_node(v)
        if not self.lifetime.covers(interval):
            raise OutOfLifetimeError(f"interval {interval} is outside lifetime {self.lifetime}")

        record = self._edges.get(key)
        if record is None:
            record = self._edges[key] = EdgeRecord()
            self._adjacency[u].add(v)
            self._adjacency[v].add(u)
        record.availability.add(interval)

        for node in key:
            if self._nodes[node] > interval.start:
                logger.debug(f"Moving appearance of {node!r} back to {interval.start}")
                self._nodes[node] = interval.start
        return self

    def add_weight_event(self, u: NodeId, v: NodeId, t: TimeInstant, delta: int = 1) -> "TimeVaryingGraph":
        """
        Increase the weight of {u, v} by ``delta`` from time ``t`` on.

        Raises:
            MissingEdgeError: If the edge does not exist
            InvalidWeightError: If delta is not a positive integer
            OutOfLifetimeError: If t is outside the lifetime
        """
        self._check_mutable()
        if isinstance(delta, bool) or not isinstance(delta, int) or delta <= 0:
            raise InvalidWeightError(f"weight delta must be a positive integer, got {delta!r}")
        self._check_in_lifetime(t)
        self.edge(u, v).add_event(t, delta)
        return self

    # Queries

    def presence(self, u: NodeId, v: NodeId, t: TimeInstant) -> bool:
        """Whether the edge {u, v} is available at ``t``; absent edges are never."""
        if u == v:
            return False
        record = self._edges.get(edge_key(u, v))
        return record is not None and t in record.availability

    def weight_at(self, u: NodeId, v: NodeId, t: TimeInstant) -> int:
        """Cumulative weight of {u, v} including events at ``t``."""
        return self.edge(u, v).weight_at(t)

    def weight_before(self, u: NodeId, v: NodeId, t: TimeInstant) -> int:
        """Cumulative weight of {u, v} from events strictly before ``t``."""
        return self.edge(u, v).weight_before(t)

    def edge_dates(self, u: NodeId, v: NodeId) -> EdgeDates:
        """
        Appearance, disappearance and characteristic dates of an edge.

        Raises:
            MissingEdgeError: If the edge does not exist
        """
        availability = self.edge(u, v).availability
        appearances = availability.starts
        disappearances = availability.ends
        return EdgeDates(appearances, disappearances,
                         tuple(sorted(appearances + disappearances)))

    def characteristic_dates(self) -> List[TimeInstant]:
        """Sorted union of the characteristic dates of every edge."""
        dates = set()
        for record in self._edges.values():
            dates.update(record.availability.starts)
            dates.update(record.availability.ends)
        return sorted(dates)

    def underlying_graph(self, window: Optional[Interval] = None) -> StaticGraph:
        """
        Static footprint of the graph over a window.

        An edge is kept when its availability meets the window; its weight is
        the cumulative weight of events before the window end. Every node that
        appeared before the window end is kept, isolated or not.

        Args:
            window: Sub-interval of the lifetime; the whole lifetime if omitted

        Returns:
            networkx Graph with ``appearance`` node and ``weight`` edge attributes
        """
        window = self._check_window(window)
        graph = self._empty_static(window)
        for node in sorted(self._nodes):
            if self._nodes[node] < window.end:
                graph.add_node(node, appearance=self._nodes[node])
        for key in sorted(self._edges):
            record = self._edges[key]
            if record.availability.overlaps(window):
                graph.add_edge(*key, weight=record.weight_before(window.end))
        return graph

    def persistent_graph(self, window: Optional[Interval] = None) -> StaticGraph:
        """
        Footprint restricted to edges available at every instant of the window.

        Only nodes incident to such an edge are kept.
        """
        window = self._check_window(window)
        graph = self._empty_static(window)
        for key in sorted(self._edges):
            record = self._edges[key]
            if record.availability.covers(window):
                for node in key:
                    if node not in graph:
                        graph.add_node(node, appearance=self._nodes[node])
                graph.add_edge(*key, weight=record.weight_before(window.end))
        return graph

    def temporal_subgraph(self, window: Interval) -> "TimeVaryingGraph":
        """
        Restrict the lifetime of the graph to a window.

        Edges keep the part of their availability inside the window and are
        dropped when nothing is left. Weight events at or after the window end
        are dropped; events before the window start are carried in as a single
        event at the window start so cumulative weights are preserved.
        Nodes that appear before the window end are kept, with appearance
        clamped to the window start.
        """
        window = self._check_window(window)
        sub = TimeVaryingGraph(window)
        for node, appearance in self._nodes.items():
            if appearance < window.end:
                sub._nodes[node] = max(appearance, window.start)
                sub._adjacency[node] = set()
        for key, record in self._edges.items():
            availability = record.availability.restrict(window)
            if not availability:
                continue
            restricted = EdgeRecord(availability)
            carried = record.weight_before(window.start)
            if carried:
                restricted.weight_events.append((window.start, carried))
            for t, delta in record.weight_events:
                if window.start <= t < window.end:
                    restricted.add_event(t, delta)
            sub._edges[key] = restricted
            sub._adjacency[key[0]].add(key[1])
            sub._adjacency[key[1]].add(key[0])
        return sub.freeze() if self._frozen else sub

    # Helpers

    def _empty_static(self, window: Interval) -> StaticGraph:
        graph = nx.Graph()
        graph.graph["window"] = window
        return graph

    def _check_mutable(self) -> None:
        if self._frozen:
            raise FrozenGraphError("graph is frozen and cannot be modified")

    def _check_in_lifetime(self, t: TimeInstant) -> None:
        check_instant(t)
        if t not in self.lifetime:
            raise OutOfLifetimeError(f"instant {t} is outside lifetime {self.lifetime}")

    def _check_window(self, window: Optional[Interval]) -> Interval:
        if window is None:
            return self.lifetime
        if not isinstance(window, Interval):
            raise TypeError(f"window must be an Interval, got {type(window).__name__}")
        if not self.lifetime.covers(window):
            raise OutOfLifetimeError(f"window {window} is outside lifetime {self.lifetime}")
        return window

    def _require_node(self, node: NodeId) -> None:
        if node not in self._nodes:
            raise UnknownNodeError(f"node {node!r} is not recorded")


# Convenience functions

def create_tvg(lifetime: Interval) -> TimeVaryingGraph:
    """Create an empty time-varying graph (convenience function)."""
    return TimeVaryingGraph(lifetime)


def record_node(g: TimeVaryingGraph, node: NodeId, appearance: TimeInstant) -> TimeVaryingGraph:
    return g.record_node(node, appearance)


def record_edge_presence(g: TimeVaryingGraph, u: NodeId, v: NodeId,
                         interval: Interval) -> TimeVaryingGraph:
    return g.record_edge_presence(u, v, interval)


def add_weight_event(g: TimeVaryingGraph, u: NodeId, v: NodeId,
                     t: TimeInstant, delta: int) -> TimeVaryingGraph:
    return g.add_weight_event(u, v, t, delta)


def presence(g: TimeVaryingGraph, u: NodeId, v: NodeId, t: TimeInstant) -> bool:
    return g.presence(u, v, t)


def edge_dates(g: TimeVaryingGraph, u: NodeId, v: NodeId) -> EdgeDates:
    return g.edge_dates(u, v)


def graph_characteristic_dates(g: TimeVaryingGraph) -> List[TimeInstant]:
    return g.characteristic_dates()


def underlying_graph(g: TimeVaryingGraph, window: Optional[Interval] = None) -> StaticGraph:
    return g.underlying_graph(window)


def temporal_subgraph(g: TimeVaryingGraph, window: Interval) -> TimeVaryingGraph:
    return g.temporal_subgraph(window)
