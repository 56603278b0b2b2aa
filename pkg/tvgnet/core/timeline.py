"""
Discrete time for tvgnet: day instants, half-open intervals and multi-intervals.

Instants are integer days since 1992-01-01 (day 0).
"""
import bisect
import re
from dataclasses import dataclass
from datetime import date, timedelta
from typing import Iterable, Iterator, List, Optional, Tuple

from .errors import InvalidInstantError, InvalidIntervalError

EPOCH = date(1992, 1, 1)

# Days since EPOCH; kept as a plain int so arithmetic stays cheap.
TimeInstant = int

_DATE_PATTERN = re.compile(r"^(\d{4})-(\d{2})(?:-(\d{2}))?$")


def check_instant(value: int) -> int:
    """Validate a time instant and return it unchanged."""
    if isinstance(value, bool) or not isinstance(value, int):
        raise InvalidInstantError(f"time instant must be an integer, got {value!r}")
    if value < 0:
        raise InvalidInstantError(f"time instant must be >= 0, got {value}")
    return value


def to_instant(day: date) -> TimeInstant:
    """
    Convert a calendar date to a time instant.

    Args:
        day: Calendar date on or after the epoch

    Returns:
        Days since 1992-01-01
    """
    return check_instant((day - EPOCH).days)


def to_date(instant: TimeInstant) -> date:
    """Convert a time instant back to its calendar date."""
    return EPOCH + timedelta(days=check_instant(instant))


def parse_date(text: str) -> date:
    """
    Parse an ISO-8601 "YYYY-MM-DD" or "YYYY-MM" date.

    Month-only dates map to the first day of the month.

    Raises:
        ValueError: If the text is not a valid calendar date
    """
    match = _DATE_PATTERN.match(text.strip())
    if not match:
        raise ValueError(f"invalid date {text!r}, expected YYYY-MM-DD or YYYY-MM")
    year, month, day = match.groups()
    return date(int(year), int(month), int(day) if day else 1)


def parse_instant(text: str) -> TimeInstant:
    """Parse an ISO date straight to a time instant."""
    day = parse_date(text)
    if day < EPOCH:
        raise InvalidInstantError(f"date {text} precedes the epoch {EPOCH.isoformat()}")
    return to_instant(day)


def format_instant(instant: TimeInstant) -> str:
    """Render an instant as an ISO date."""
    return to_date(instant).isoformat()


@dataclass(frozen=True, order=True)
class Interval:
    """Half-open interval [start, end) of time instants."""
    start: TimeInstant
    end: TimeInstant

    def __post_init__(self):
        check_instant(self.start)
        check_instant(self.end)
        if self.start >= self.end:
            raise InvalidIntervalError(
                f"interval [{self.start},{self.end}) must satisfy start < end"
            )

    def __contains__(self, t: object) -> bool:
        return isinstance(t, int) and self.start <= t < self.end

    def __str__(self) -> str:
        return f"[{self.start},{self.end})"

    @property
    def length(self) -> int:
        """Number of instants in the interval."""
        return self.end - self.start

    def overlaps(self, other: "Interval") -> bool:
        """Whether the two intervals share at least one instant."""
        return self.start < other.end and other.start < self.end

    def intersection(self, other: "Interval") -> Optional["Interval"]:
        """Common part of both intervals, or None when disjoint."""
        start = max(self.start, other.start)
        end = min(self.end, other.end)
        if start >= end:
            return None
        return Interval(start, end)

    def covers(self, other: "Interval") -> bool:
        """Whether ``other`` lies entirely inside this interval."""
        return self.start <= other.start and other.end <= self.end

    def to_iso(self) -> Tuple[str, str]:
        """ISO dates of start and end."""
        return format_instant(self.start), format_instant(self.end)


class MultiInterval:
    """
    Sorted union of pairwise disjoint, non-adjacent intervals.

    Every mutation re-normalizes, so overlapping or touching intervals are
    merged as they are added.
    """

    __slots__ = ("_starts", "_ends")

    def __init__(self, intervals: Iterable[Interval] = ()):
        self._starts: List[int] = []
        self._ends: List[int] = []
        for interval in sorted(intervals):
            self.add(interval)

    def add(self, interval: Interval) -> None:
        """Merge an interval into the union."""
        start, end = interval.start, interval.end
        # First interval whose end reaches start, last whose start reaches end.
        lo = bisect.bisect_left(self._ends, start)
        hi = bisect.bisect_right(self._starts, end)
        if lo < hi:
            start = min(start, self._starts[lo])
            end = max(end, self._ends[hi - 1])
        self._starts[lo:hi] = [start]
        self._ends[lo:hi] = [end]

    def __contains__(self, t: object) -> bool:
        if not isinstance(t, int):
            return False
        index = bisect.bisect_right(self._starts, t) - 1
        return index >= 0 and t < self._ends[index]

    def __iter__(self) -> Iterator[Interval]:
        for start, end in zip(self._starts, self._ends):
            yield Interval(start, end)

    def __len__(self) -> int:
        return len(self._starts)

    def __bool__(self) -> bool:
        return bool(self._starts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiInterval):
            return NotImplemented
        return self._starts == other._starts and self._ends == other._ends

    def __repr__(self) -> str:
        body = ",".join(str(interval) for interval in self)
        return f"MultiInterval({{{body}}})"

    @property
    def intervals(self) -> Tuple[Interval, ...]:
        """The normalized intervals in ascending order."""
        return tuple(self)

    @property
    def starts(self) -> Tuple[int, ...]:
        """Appearance dates."""
        return tuple(self._starts)

    @property
    def ends(self) -> Tuple[int, ...]:
        """Disappearance dates."""
        return tuple(self._ends)

    @property
    def first(self) -> Optional[int]:
        """Earliest instant of the union, or None when empty."""
        return self._starts[0] if self._starts else None

    def copy(self) -> "MultiInterval":
        clone = MultiInterval()
        clone._starts = list(self._starts)
        clone._ends = list(self._ends)
        return clone

    def overlaps(self, window: Interval) -> bool:
        """Whether any instant of the window is in the union."""
        index = bisect.bisect_right(self._ends, window.start)
        return index < len(self._starts) and self._starts[index] < window.end

    def covers(self, window: Interval) -> bool:
        """Whether every instant of the window is in the union."""
        index = bisect.bisect_right(self._starts, window.start) - 1
        return index >= 0 and self._ends[index] >= window.end

    def restrict(self, window: Interval) -> "MultiInterval":
        """Intersection of the union with a window."""
        restricted = MultiInterval()
        for interval in self:
            part = interval.intersection(window)
            if part is not None:
                restricted._starts.append(part.start)
                restricted._ends.append(part.end)
        return restricted

    def next_present(self, t: int) -> Optional[int]:
        """Smallest instant >= t that is in the union, or None."""
        index = bisect.bisect_right(self._ends, t)
        if index >= len(self._starts):
            return None
        return max(t, self._starts[index])
