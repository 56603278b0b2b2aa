"""
CSV tables of metric series and community tracks.

Cells are written as plain text: integers in decimal, reals with Python's
shortest round-trip representation (``.`` as decimal point whatever the
locale) and undefined values as empty cells. Windows are two ISO dates,
the first day and the exclusive end. Reading a table back yields rows equal
to the written ones.
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd

from ..analysis.metrics import MetricRow, StructuralIndices
from ..analysis.tracking import CommunityTrackRow
from ..core.errors import InputError
from ..core.timeline import Interval, format_instant, parse_instant
from ..utils.file_ops import write_text_atomic

logger = logging.getLogger(__name__)

METRIC_COLUMNS = [
    "window_start", "window_end", "nodes", "edges", "components", "density",
    "avg_degree", "avg_clustering", "avg_path_length", "diameter",
    "power_law_slope", "modularity", "edge_node_ratio",
]
TRACK_COLUMNS = [
    "window_start", "window_end", "vertices", "edges", "diameter",
    "cyclomatic", "alpha", "beta", "gamma",
]
MEASURES = ["Vertices", "Edges", "Diameter", "Cyclomatic", "Alpha", "Beta", "Gamma"]

_INT_FIELDS = {"nodes", "edges", "components", "diameter", "vertices", "cyclomatic"}


def format_cell(value: Any) -> str:
    """Render one cell."""
    if value is None:
        return ""
    if isinstance(value, bool):
        raise TypeError("boolean cells are not supported")
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return str(value)


def _parse_int(text: str) -> Optional[int]:
    return int(text) if text != "" else None


def _parse_float(text: str) -> Optional[float]:
    return float(text) if text != "" else None


def _window_cells(window: Interval) -> List[str]:
    return [format_instant(window.start), format_instant(window.end)]


def _window(start: str, end: str) -> Interval:
    return Interval(parse_instant(start), parse_instant(end))


def _to_csv(frame: pd.DataFrame, path: Union[str, Path]) -> Path:
    text = frame.to_csv(index=False, lineterminator="\n")
    return write_text_atomic(path, text)


def _read_frame(path: Union[str, Path], columns: Sequence[str]) -> pd.DataFrame:
    try:
        frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise InputError(f"cannot read table: {e}", source=str(path)) from None
    if columns and list(frame.columns) != list(columns):
        raise InputError(f"unexpected columns {list(frame.columns)}, expected {list(columns)}",
                         source=str(path))
    return frame


# Metric series

def metric_rows_frame(rows: Sequence[MetricRow]) -> pd.DataFrame:
    """Metric rows as a text DataFrame in the fixed column order."""
    records = []
    for row in rows:
        cells = _window_cells(row.window)
        cells += [format_cell(getattr(row, name)) for name in METRIC_COLUMNS[2:]]
        records.append(cells)
    return pd.DataFrame(records, columns=METRIC_COLUMNS, dtype=str)


def write_metric_rows(rows: Sequence[MetricRow], path: Union[str, Path]) -> Path:
    """Write a metric series CSV."""
    written = _to_csv(metric_rows_frame(rows), path)
    logger.info(f"Wrote {len(rows)} metric rows to {written}")
    return written


def read_metric_rows(path: Union[str, Path]) -> List[MetricRow]:
    """
    Parse a metric series CSV.

    Raises:
        InputError: If the file is unreadable or its columns differ
    """
    frame = _read_frame(path, METRIC_COLUMNS)
    rows = []
    for line_number, record in enumerate(frame.to_dict("records"), start=2):
        try:
            values: Dict[str, Any] = {}
            for name in METRIC_COLUMNS[2:]:
                parse = _parse_int if name in _INT_FIELDS else _parse_float
                values[name] = parse(record[name])
            rows.append(MetricRow(window=_window(record["window_start"], record["window_end"]),
                                  **values))
        except ValueError as e:
            raise InputError(f"invalid metric row: {e}", line_number, str(path)) from None
    return rows


# Community tracks

def _track_values(row: CommunityTrackRow) -> List[Any]:
    indices = row.indices
    return [row.vertices, row.edges, row.diameter, indices.cyclomatic,
            indices.alpha, indices.beta, indices.gamma]


def _track_row(window: Interval, cells: Sequence[str]) -> CommunityTrackRow:
    vertices, edges, diameter, cyclomatic = (_parse_int(cell) for cell in cells[:4])
    alpha, beta, gamma = (_parse_float(cell) for cell in cells[4:])
    if vertices is None or edges is None or cyclomatic is None:
        raise ValueError("vertices, edges and cyclomatic must be present")
    return CommunityTrackRow(window, vertices, edges, diameter,
                             StructuralIndices(cyclomatic, alpha, beta, gamma))


def window_label(window: Interval) -> str:
    """Column label of a window in the wide layout."""
    start, end = _window_cells(window)
    return f"{start}/{end}"


def track_rows_wide_frame(rows: Sequence[CommunityTrackRow]) -> pd.DataFrame:
    """Measures as rows, one column per window."""
    data = {"Measures": MEASURES}
    for row in rows:
        data[window_label(row.window)] = [format_cell(value) for value in _track_values(row)]
    return pd.DataFrame(data, dtype=str)


def track_rows_tidy_frame(rows: Sequence[CommunityTrackRow]) -> pd.DataFrame:
    """One row per window."""
    records = [_window_cells(row.window) + [format_cell(value) for value in _track_values(row)]
               for row in rows]
    return pd.DataFrame(records, columns=TRACK_COLUMNS, dtype=str)


def write_track_rows_wide(rows: Sequence[CommunityTrackRow], path: Union[str, Path]) -> Path:
    """Write the measures-by-window community table."""
    return _to_csv(track_rows_wide_frame(rows), path)


def write_track_rows_tidy(rows: Sequence[CommunityTrackRow], path: Union[str, Path]) -> Path:
    """Write the one-row-per-window community table."""
    return _to_csv(track_rows_tidy_frame(rows), path)


def read_track_rows_tidy(path: Union[str, Path]) -> List[CommunityTrackRow]:
    """Parse a tidy community table."""
    frame = _read_frame(path, TRACK_COLUMNS)
    rows = []
    for line_number, record in enumerate(frame.to_dict("records"), start=2):
        try:
            window = _window(record["window_start"], record["window_end"])
            rows.append(_track_row(window, [record[name] for name in TRACK_COLUMNS[2:]]))
        except ValueError as e:
            raise InputError(f"invalid community row: {e}", line_number, str(path)) from None
    return rows


def read_track_rows_wide(path: Union[str, Path]) -> List[CommunityTrackRow]:
    """Parse a measures-by-window community table."""
    frame = _read_frame(path, [])
    if not len(frame.columns) or frame.columns[0] != "Measures" or list(frame["Measures"]) != MEASURES:
        raise InputError(f"expected a 'Measures' column with rows {MEASURES}", source=str(path))
    rows = []
    for label in frame.columns[1:]:
        try:
            start, end = label.split("/")
            rows.append(_track_row(_window(start, end), list(frame[label])))
        except ValueError as e:
            raise InputError(f"invalid window column {label!r}: {e}", source=str(path)) from None
    return rows
