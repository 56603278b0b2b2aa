"""
Unit tests for instants, intervals and multi-intervals.
"""
import random
from datetime import date

import pytest

from tvgnet.core.errors import InvalidInstantError, InvalidIntervalError
from tvgnet.core.timeline import (
    EPOCH,
    Interval,
    MultiInterval,
    format_instant,
    parse_date,
    parse_instant,
    to_date,
    to_instant,
)


class TestInstants:
    """Test conversion between dates and day instants."""

    def test_epoch_is_day_zero(self):
        assert to_instant(EPOCH) == 0
        assert to_date(0) == date(1992, 1, 1)

    def test_day_offsets(self):
        assert to_instant(date(1992, 1, 30)) == 29
        assert to_instant(date(1993, 1, 1)) == 366  # 1992 is a leap year

    def test_parse_month_only_date(self):
        assert parse_date("1995-03") == date(1995, 3, 1)
        assert parse_instant("1992-02") == 31

    def test_format_instant(self):
        assert format_instant(29) == "1992-01-30"

    def test_invalid_dates(self):
        with pytest.raises(ValueError):
            parse_date("1992/01/01")
        with pytest.raises(ValueError):
            parse_date("1992-02-30")
        with pytest.raises(InvalidInstantError):
            parse_instant("1991-12-31")

    def test_negative_instant_rejected(self):
        with pytest.raises(InvalidInstantError):
            to_date(-1)


class TestInterval:
    """Test half-open intervals."""

    def test_membership_is_half_open(self):
        interval = Interval(2, 5)
        assert 2 in interval
        assert 4 in interval
        assert 5 not in interval
        assert 1 not in interval
        assert interval.length == 3

    def test_empty_interval_rejected(self):
        with pytest.raises(InvalidIntervalError):
            Interval(3, 3)
        with pytest.raises(InvalidIntervalError):
            Interval(4, 3)

    def test_non_integer_bounds_rejected(self):
        with pytest.raises(InvalidInstantError):
            Interval(0.5, 2)
        with pytest.raises(InvalidInstantError):
            Interval(True, 2)

    def test_overlap_and_intersection(self):
        assert Interval(0, 3).overlaps(Interval(2, 4))
        assert not Interval(0, 2).overlaps(Interval(2, 4))
        assert Interval(0, 3).intersection(Interval(2, 4)) == Interval(2, 3)
        assert Interval(0, 2).intersection(Interval(2, 4)) is None

    def test_covers(self):
        assert Interval(0, 10).covers(Interval(0, 10))
        assert Interval(0, 10).covers(Interval(3, 4))
        assert not Interval(0, 10).covers(Interval(9, 11))

    def test_str(self):
        assert str(Interval(0, 30)) == "[0,30)"


class TestMultiInterval:
    """Test normalized unions of intervals."""

    def test_adjacent_intervals_merge(self):
        m = MultiInterval([Interval(0, 2), Interval(2, 4)])
        assert m.intervals == (Interval(0, 4),)

    def test_overlapping_intervals_merge(self):
        m = MultiInterval([Interval(5, 9), Interval(0, 3), Interval(2, 6)])
        assert m.intervals == (Interval(0, 9),)

    def test_disjoint_intervals_stay_apart(self):
        m = MultiInterval([Interval(4, 6), Interval(0, 2)])
        assert m.intervals == (Interval(0, 2), Interval(4, 6))
        assert m.starts == (0, 4)
        assert m.ends == (2, 6)
        assert 3 not in m
        assert 5 in m

    def test_interval_bridging_several(self):
        m = MultiInterval([Interval(0, 1), Interval(3, 4), Interval(6, 7)])
        m.add(Interval(1, 6))
        assert m.intervals == (Interval(0, 7),)

    def test_empty(self):
        m = MultiInterval()
        assert not m
        assert m.first is None
        assert m.next_present(0) is None
        assert not m.overlaps(Interval(0, 5))

    def test_overlaps_and_covers_window(self):
        m = MultiInterval([Interval(0, 2), Interval(4, 8)])
        assert m.overlaps(Interval(1, 3))
        assert not m.overlaps(Interval(2, 4))
        assert m.covers(Interval(4, 8))
        assert not m.covers(Interval(1, 5))

    def test_restrict(self):
        m = MultiInterval([Interval(0, 2), Interval(4, 8)])
        assert m.restrict(Interval(1, 5)).intervals == (Interval(1, 2), Interval(4, 5))
        assert not m.restrict(Interval(2, 4))

    def test_next_present(self):
        m = MultiInterval([Interval(2, 3), Interval(6, 9)])
        assert m.next_present(0) == 2
        assert m.next_present(2) == 2
        assert m.next_present(3) == 6
        assert m.next_present(7) == 7
        assert m.next_present(9) is None

    @pytest.mark.slow
    def test_matches_set_oracle(self):
        """Membership, overlap and normalization agree with plain sets of instants."""
        rng = random.Random(17)
        for _ in range(300):
            intervals = []
            for _ in range(rng.randint(0, 6)):
                start = rng.randint(0, 30)
                intervals.append(Interval(start, start + rng.randint(1, 6)))
            m = MultiInterval(intervals)
            instants = {t for iv in intervals for t in range(iv.start, iv.end)}

            assert {t for t in range(40) if t in m} == instants
            parts = m.intervals
            for left, right in zip(parts, parts[1:]):
                assert left.end < right.start
            window = Interval(rng.randint(0, 30), 31 + rng.randint(0, 5))
            window_instants = set(range(window.start, window.end))
            assert m.overlaps(window) == bool(instants & window_instants)
            assert m.covers(window) == window_instants.issubset(instants)
