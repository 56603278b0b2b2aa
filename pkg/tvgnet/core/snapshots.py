"""
Snapshot sequences of a time-varying graph.
"""
import logging
from enum import Enum
from typing import List, NamedTuple, Union

from .errors import InvalidStepError
from .timeline import Interval
from .tvg import StaticGraph, TimeVaryingGraph

logger = logging.getLogger(__name__)


class SnapshotMode(Enum):
    """How the lifetime is cut into windows."""
    FIXED_STEP = "fixed-step"
    CHARACTERISTIC_DATES = "characteristic-dates"


class Snapshot(NamedTuple):
    """
    One element of a snapshot sequence.

    ``window`` is the step the snapshot stands for; the interval the footprint
    was actually taken over is stored in ``graph.graph["span"]`` (it starts at
    the lifetime start for cumulative snapshots).
    """
    window: Interval
    graph: StaticGraph


def fixed_step_windows(lifetime: Interval, step: int) -> List[Interval]:
    """
    Consecutive windows of ``step`` days covering the lifetime.

    The last window is shorter when the lifetime is not a multiple of step.

    Raises:
        InvalidStepError: If step is not a positive integer
    """
    if isinstance(step, bool) or not isinstance(step, int) or step <= 0:
        raise InvalidStepError(f"snapshot step must be a positive number of days, got {step!r}")
    windows = []
    start = lifetime.start
    while start < lifetime.end:
        end = min(start + step, lifetime.end)
        windows.append(Interval(start, end))
        start = end
    return windows


def characteristic_windows(g: TimeVaryingGraph) -> List[Interval]:
    """Windows between consecutive characteristic dates of the graph."""
    dates = g.characteristic_dates()
    return [Interval(a, b) for a, b in zip(dates, dates[1:])]


def snapshot_sequence(g: TimeVaryingGraph,
                      mode: Union[SnapshotMode, str] = SnapshotMode.FIXED_STEP,
                      step: int = 365,
                      cumulative: bool = True,
                      persistent: bool = False) -> List[Snapshot]:
    """
    Cut a time-varying graph into a sequence of static snapshots.

    Args:
        g: Graph to cut
        mode: Fixed-step windows or windows between characteristic dates
        step: Window length in days (fixed-step mode)
        cumulative: Fixed-step footprints cover [lifetime.start, window.end)
            instead of the window alone; ignored in characteristic-dates mode
        persistent: Keep only edges present during the whole footprint span

    Returns:
        Snapshots ordered by window
    """
    mode = SnapshotMode(mode)
    if mode is SnapshotMode.FIXED_STEP:
        windows = fixed_step_windows(g.lifetime, step)
    else:
        windows = characteristic_windows(g)
        cumulative = False

    snapshots = []
    for window in windows:
        span = Interval(g.lifetime.start, window.end) if cumulative else window
        if persistent:
            graph = g.persistent_graph(span)
        else:
            graph = g.underlying_graph(span)
        graph.graph["span"] = span
        graph.graph["window"] = window
        snapshots.append(Snapshot(window, graph))

    logger.debug(f"Cut {len(snapshots)} snapshots ({mode.value}, cumulative={cumulative})")
    return snapshots
