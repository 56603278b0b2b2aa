"""
Modularity scoring and deterministic Louvain community detection.

Louvain alternates local moving (each node goes to the neighboring or empty
community with the largest strictly positive modularity gain) with
aggregation of communities into single nodes, until a level makes no move.
Nodes are visited in ascending id order, gain ties go to the smallest
community and aggregated nodes keep the order of their smallest member, so
the same graph always yields the same partition.
"""
import heapq
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from ..core.errors import EmptyWindowError, InvariantViolation
from ..core.tvg import NodeId, StaticGraph

logger = logging.getLogger(__name__)

GAIN_EPSILON = 1e-12
SCORE_TOLERANCE = 1e-9


@dataclass(frozen=True)
class Partition:
    """
    Community assignment of every node of a graph.

    Community ids are the smallest member node id. ``score`` is the
    modularity of the assignment, or None when the graph has no edges.
    """
    assignment: Mapping[NodeId, NodeId]
    score: Optional[float] = None
    levels: int = field(default=0, compare=False)

    def communities(self) -> Dict[NodeId, List[NodeId]]:
        """Community id -> sorted members, ordered by id."""
        groups: Dict[NodeId, List[NodeId]] = {}
        for node in sorted(self.assignment):
            groups.setdefault(self.assignment[node], []).append(node)
        return dict(sorted(groups.items()))

    def __len__(self) -> int:
        return len(set(self.assignment.values()))


def community_sizes(p: Partition) -> Dict[NodeId, int]:
    """Community id -> number of members."""
    return {cid: len(members) for cid, members in p.communities().items()}


def partition_from_groups(groups: Sequence[Sequence[NodeId]], score: Optional[float] = None) -> Partition:
    """Build a partition from groups of nodes, naming each by its smallest member."""
    assignment = {}
    for group in groups:
        cid = min(group)
        for node in group:
            if node in assignment:
                raise ValueError(f"node {node!r} is in more than one group")
            assignment[node] = cid
    return Partition(dict(sorted(assignment.items())), score)


def modularity(G: StaticGraph, p: Partition, resolution: float = 1.0,
               weighted: bool = False) -> Optional[float]:
    """
    Newman modularity of a partition.

    Edge weights are ignored unless ``weighted`` is set.

    Returns:
        Q, or None when the graph has no edges (or no edge weight)

    Raises:
        ValueError: If the partition does not cover exactly the graph's nodes
            or resolution is not positive
        InvariantViolation: If Q falls outside its theoretical range
    """
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")
    if set(p.assignment) != set(G.nodes):
        raise ValueError("partition does not cover exactly the nodes of the graph")
    weight = "weight" if weighted else None
    if G.size(weight=weight) == 0:
        return None

    communities = list(p.communities().values())
    q = nx.community.modularity(G, communities, weight=weight, resolution=resolution)
    lower = -0.5 if resolution <= 1 else -resolution
    if not lower - SCORE_TOLERANCE <= q <= 1 + SCORE_TOLERANCE:
        raise InvariantViolation(f"modularity {q} outside [{lower}, 1]")
    return float(q)


class _Level:
    """One level of the Louvain hierarchy: a weighted graph on integer nodes."""

    def __init__(self, adjacency: List[Dict[int, float]], loops: List[float],
                 members: List[List[int]]):
        self.adjacency = adjacency
        self.loops = loops
        self.members = members
        self.degree = [sum(adj.values()) + 2 * loop for adj, loop in zip(adjacency, loops)]
        self.two_m = sum(self.degree)

    def __len__(self) -> int:
        return len(self.adjacency)

    @classmethod
    def from_graph(cls, G: StaticGraph, nodes: Sequence[NodeId], weighted: bool) -> "_Level":
        index = {node: i for i, node in enumerate(nodes)}
        adjacency: List[Dict[int, float]] = [{} for _ in nodes]
        loops = [0.0] * len(nodes)
        for u, v, data in G.edges(data=True):
            w = float(data.get("weight", 1)) if weighted else 1.0
            if w == 0:
                continue
            i, j = index[u], index[v]
            if i == j:
                loops[i] += w
                continue
            adjacency[i][j] = adjacency[i].get(j, 0.0) + w
            adjacency[j][i] = adjacency[j].get(i, 0.0) + w
        return cls(adjacency, loops, [[i] for i in range(len(nodes))])

    def aggregate(self, community: Sequence[int]) -> "_Level":
        """Collapse communities into nodes, numbered by their first member."""
        order: Dict[int, int] = {}
        for c in community:
            if c not in order:
                order[c] = len(order)
        adjacency: List[Dict[int, float]] = [{} for _ in order]
        loops = [0.0] * len(order)
        members: List[List[int]] = [[] for _ in order]
        for i, c in enumerate(community):
            a = order[c]
            members[a].extend(self.members[i])
            loops[a] += self.loops[i]
            for j, w in self.adjacency[i].items():
                b = order[community[j]]
                if a == b:
                    # each internal edge is seen from both ends
                    loops[a] += w / 2
                else:
                    adjacency[a][b] = adjacency[a].get(b, 0.0) + w
        return _Level(adjacency, loops, [sorted(group) for group in members])


def _local_moving(level: _Level, resolution: float,
                  initial: Optional[Sequence[int]] = None) -> Tuple[List[int], int]:
    """
    Move nodes between communities until no move has a positive gain.

    Returns:
        (community of each level node, number of moves made)
    """
    n = len(level)
    community = list(range(n)) if initial is None else list(initial)
    tot = [0.0] * n
    size = [0] * n
    for i, c in enumerate(community):
        tot[c] += level.degree[i]
        size[c] += 1
    empty = [c for c in range(n) if size[c] == 0]
    heapq.heapify(empty)

    scale = resolution / level.two_m
    total_moves = 0
    while True:
        moves = 0
        for i in range(n):
            current = community[i]
            k = level.degree[i]
            links: Dict[int, float] = {}
            for j, w in level.adjacency[i].items():
                c = community[j]
                links[c] = links.get(c, 0.0) + w

            tot[current] -= k
            size[current] -= 1
            if size[current] == 0:
                heapq.heappush(empty, current)
            while empty and size[empty[0]] > 0:
                heapq.heappop(empty)

            best = current
            best_gain = links.get(current, 0.0) - scale * tot[current] * k
            candidates = set(links)
            if empty:
                candidates.add(empty[0])
            for c in sorted(candidates):
                gain = links.get(c, 0.0) - scale * tot[c] * k
                if gain > best_gain + GAIN_EPSILON:
                    best, best_gain = c, gain

            community[i] = best
            tot[best] += k
            size[best] += 1
            if best != current:
                moves += 1
        total_moves += moves
        if moves == 0:
            return community, total_moves


def local_moving_gains(G: StaticGraph, p: Partition, resolution: float = 1.0,
                       weighted: bool = False) -> int:
    """
    Number of single-node moves a local moving pass makes from ``p``.

    Zero means ``p`` is a fixed point of local moving.
    """
    nodes = sorted(G.nodes)
    level = _Level.from_graph(G, nodes, weighted)
    if level.two_m == 0:
        return 0
    _, moves = _local_moving(level, resolution, _node_labels(nodes, p))
    return moves


def _node_labels(nodes: Sequence[NodeId], p: Partition) -> List[int]:
    """Integer community labels, each the index of the community's first node."""
    first: Dict[NodeId, int] = {}
    labels = []
    for i, node in enumerate(nodes):
        labels.append(first.setdefault(p.assignment[node], i))
    return labels


def louvain(G: StaticGraph, resolution: float = 1.0, weighted: bool = False) -> Partition:
    """
    Detect communities by deterministic Louvain modularity optimization.

    After the level loop converges, one node-level pass is run from the
    result; if it still finds moves the loop resumes from the improved
    partition, so the returned partition is a fixed point of local moving.

    Args:
        G: Graph to partition
        resolution: Modularity resolution (> 0)
        weighted: Use edge ``weight`` attributes instead of unit weights

    Returns:
        Partition scored with ``modularity``

    Raises:
        EmptyWindowError: If the graph has no nodes
        ValueError: If resolution is not positive
    """
    if G.number_of_nodes() == 0:
        raise EmptyWindowError("cannot detect communities in an empty graph")
    if resolution <= 0:
        raise ValueError(f"resolution must be positive, got {resolution}")

    nodes = sorted(G.nodes)
    base = _Level.from_graph(G, nodes, weighted)
    if base.two_m == 0:
        logger.debug("Graph without weighted edges, returning singleton partition")
        return Partition({node: node for node in nodes}, None)

    labels = list(range(len(nodes)))
    levels = 0
    while True:
        level = base.aggregate(labels)
        while True:
            community, moves = _local_moving(level, resolution)
            if moves == 0:
                break
            level = level.aggregate(community)
            levels += 1
        labels = [0] * len(nodes)
        for members in level.members:
            for i in members:
                labels[i] = members[0]
        labels, moves = _local_moving(base, resolution, labels)
        if moves == 0:
            break
        logger.debug(f"Node-level refinement made {moves} moves, resuming aggregation")

    assignment = {nodes[i]: nodes[first] for i, first in enumerate(_group_minimum(labels))}
    partition = Partition(assignment, None, levels)
    score = modularity(G, partition, resolution, weighted)
    logger.debug(f"Louvain found {len(partition)} communities, Q={score}",
                 extra={"nodes": len(nodes), "levels": levels})
    return Partition(assignment, score, levels)


def _group_minimum(labels: Sequence[int]) -> List[int]:
    """For every position, the smallest position sharing its label."""
    first: Dict[int, int] = {}
    for i, label in enumerate(labels):
        first.setdefault(label, i)
    return [first[label] for label in labels]


def largest_community(G: StaticGraph, p: Partition) -> FrozenSet[NodeId]:
    """
    Members of the largest community; ties go to the smallest community id.

    Raises:
        ValueError: If the partition does not cover the graph's nodes
    """
    if set(p.assignment) != set(G.nodes):
        raise ValueError("partition does not cover exactly the nodes of the graph")
    if not p.assignment:
        return frozenset()
    communities = p.communities()
    best = min(communities, key=lambda cid: (-len(communities[cid]), cid))
    return frozenset(communities[best])
