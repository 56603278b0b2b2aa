"""
CSV and GEXF writers.
"""
from .gexf import SnapshotGEXFWriter, gexf_bytes, gexf_graph, write_snapshot_gexf
from .tables import (
    MEASURES,
    METRIC_COLUMNS,
    TRACK_COLUMNS,
    read_metric_rows,
    read_track_rows_tidy,
    read_track_rows_wide,
    write_metric_rows,
    write_track_rows_tidy,
    write_track_rows_wide,
)

__all__ = [
    "MEASURES",
    "METRIC_COLUMNS",
    "TRACK_COLUMNS",
    "SnapshotGEXFWriter",
    "gexf_bytes",
    "gexf_graph",
    "read_metric_rows",
    "read_track_rows_tidy",
    "read_track_rows_wide",
    "write_metric_rows",
    "write_snapshot_gexf",
    "write_track_rows_tidy",
    "write_track_rows_wide",
]
