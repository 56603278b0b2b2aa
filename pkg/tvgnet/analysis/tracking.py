"""
Tracking of the largest community across a snapshot sequence.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import FrozenSet, List, Optional

from ..core.errors import EmptyWindowError, WindowIndexError
from ..core.snapshots import Snapshot, snapshot_sequence
from ..core.timeline import Interval
from ..core.tvg import NodeId, StaticGraph, TimeVaryingGraph
from .community import Partition, largest_community, louvain
from .metrics import StructuralIndices, path_metrics, structural_indices
from .series import map_windows

logger = logging.getLogger(__name__)

DEFAULT_TRACKING_STEP = 182


@dataclass(frozen=True)
class CommunityTrackRow:
    """Measurements of the tracked community's induced subgraph in one window."""
    window: Interval
    vertices: int
    edges: int
    diameter: Optional[int]
    indices: StructuralIndices


def measure_community(window: Interval, G: StaticGraph, members: FrozenSet[NodeId]) -> CommunityTrackRow:
    """Measure the subgraph of ``G`` induced by ``members``."""
    sub = G.subgraph(sorted(node for node in members if node in G))
    _, diameter = path_metrics(sub)
    return CommunityTrackRow(
        window=window,
        vertices=sub.number_of_nodes(),
        edges=sub.number_of_edges(),
        diameter=diameter,
        indices=structural_indices(sub),
    )


def successor_community(p: Partition, tracked: FrozenSet[NodeId]) -> Optional[FrozenSet[NodeId]]:
    """
    Community of ``p`` that best continues ``tracked``.

    Preference goes to the largest overlap, then the largest Jaccard index,
    then the smallest community id.

    Returns:
        Member set, or None when no community overlaps ``tracked``
    """
    best = None
    best_key = (0, Fraction(0))
    for cid, members in p.communities().items():
        overlap = len(tracked.intersection(members))
        if overlap == 0:
            continue
        key = (overlap, Fraction(overlap, len(tracked.union(members))))
        if key > best_key:
            best, best_key = members, key
    return frozenset(best) if best is not None else None


def track_largest_community(g: TimeVaryingGraph, step: int = DEFAULT_TRACKING_STEP,
                            anchor: int = 0, resolution: float = 1.0,
                            cumulative: bool = True, weighted: bool = False,
                            frozen: bool = False, workers: int = 1) -> List[CommunityTrackRow]:
    """
    Follow the largest community from an anchor window onwards.

    The largest community of the anchor window's Louvain partition is
    tracked. In each later window the tracked set becomes the community with
    the largest overlap with the previous one; when nothing overlaps, the
    window's own largest community is taken. With ``frozen`` the anchor
    member set is re-measured instead of re-detected.

    Args:
        g: Time-varying graph
        step: Window length in days
        anchor: Index of the first tracked window
        resolution: Louvain resolution
        cumulative: Cumulative footprints
        weighted: Weighted modularity
        frozen: Keep the anchor member set
        workers: Threads used to run Louvain on the windows

    Returns:
        One row per window from the anchor on

    Raises:
        WindowIndexError: If anchor is not a window index
        EmptyWindowError: If the anchor window has no nodes
    """
    snapshots = snapshot_sequence(g, step=step, cumulative=cumulative)
    if not 0 <= anchor < len(snapshots):
        raise WindowIndexError(f"anchor {anchor} is outside the {len(snapshots)} windows")
    tracked_snapshots = snapshots[anchor:]
    anchor_snapshot = tracked_snapshots[0]
    if anchor_snapshot.graph.number_of_nodes() == 0:
        raise EmptyWindowError(f"anchor window {anchor_snapshot.window} has no nodes")

    if frozen:
        partitions = [louvain(anchor_snapshot.graph, resolution, weighted)]
    else:
        partitions = map_windows(lambda s: _partition_or_none(s, resolution, weighted),
                                 tracked_snapshots, workers)

    members = largest_community(anchor_snapshot.graph, partitions[0])
    logger.info(f"Tracking a community of {len(members)} authors from window {anchor_snapshot.window}")

    rows = []
    for index, snapshot in enumerate(tracked_snapshots):
        if index > 0 and not frozen:
            members = _next_members(snapshot, partitions[index], members)
        rows.append(measure_community(snapshot.window, snapshot.graph, members))
    return rows


def _partition_or_none(snapshot: Snapshot, resolution: float, weighted: bool) -> Optional[Partition]:
    if snapshot.graph.number_of_nodes() == 0:
        return None
    return louvain(snapshot.graph, resolution, weighted)


def _next_members(snapshot: Snapshot, p: Optional[Partition],
                  previous: FrozenSet[NodeId]) -> FrozenSet[NodeId]:
    if p is None:
        logger.warning(f"Window {snapshot.window} is empty, tracked community is empty",
                       extra={"window": str(snapshot.window)})
        return frozenset()
    successor = successor_community(p, previous)
    if successor is None:
        logger.warning(f"No community of window {snapshot.window} overlaps the tracked one, "
                       f"falling back to the largest",
                       extra={"window": str(snapshot.window)})
        return largest_community(snapshot.graph, p)
    return successor
