"""
tvgnet core: time-varying graph algebra, snapshots, journeys and configuration.
"""

from .errors import (
    TVGNetError,
    ConfigError,
    TemporalGraphError,
    InvalidInstantError,
    InvalidIntervalError,
    OutOfLifetimeError,
    SelfLoopError,
    UnknownNodeError,
    MissingEdgeError,
    InvalidWeightError,
    FrozenGraphError,
    InvalidStepError,
    InputError,
    CorpusParseError,
    SerializationError,
    EmptyWindowError,
    WindowIndexError,
    InvariantViolation,
)
from .timeline import (
    EPOCH,
    Interval,
    MultiInterval,
    TimeInstant,
    format_instant,
    parse_date,
    parse_instant,
    to_date,
    to_instant,
)
from .tvg import (
    EdgeDates,
    EdgeRecord,
    StaticGraph,
    TimeVaryingGraph,
    add_weight_event,
    create_tvg,
    edge_dates,
    edge_key,
    graph_characteristic_dates,
    presence,
    record_edge_presence,
    record_node,
    temporal_subgraph,
    underlying_graph,
)
from .snapshots import Snapshot, SnapshotMode, snapshot_sequence
from .journeys import earliest_arrival, is_temporally_connected, journey_exists
from .serialization import dump_tvg, dumps_tvg, load_tvg, loads_tvg, read_tvg, save_tvg
from .config import RunConfig, load_config

__all__ = [
    # Errors
    "TVGNetError",
    "ConfigError",
    "TemporalGraphError",
    "InvalidInstantError",
    "InvalidIntervalError",
    "OutOfLifetimeError",
    "SelfLoopError",
    "UnknownNodeError",
    "MissingEdgeError",
    "InvalidWeightError",
    "FrozenGraphError",
    "InvalidStepError",
    "InputError",
    "CorpusParseError",
    "SerializationError",
    "EmptyWindowError",
    "WindowIndexError",
    "InvariantViolation",

    # Time
    "EPOCH",
    "Interval",
    "MultiInterval",
    "TimeInstant",
    "format_instant",
    "parse_date",
    "parse_instant",
    "to_date",
    "to_instant",

    # Time-varying graphs
    "EdgeDates",
    "EdgeRecord",
    "StaticGraph",
    "TimeVaryingGraph",
    "add_weight_event",
    "create_tvg",
    "edge_dates",
    "edge_key",
    "graph_characteristic_dates",
    "presence",
    "record_edge_presence",
    "record_node",
    "temporal_subgraph",
    "underlying_graph",
    "Snapshot",
    "SnapshotMode",
    "snapshot_sequence",
    "earliest_arrival",
    "is_temporally_connected",
    "journey_exists",

    # Serialization
    "dump_tvg",
    "dumps_tvg",
    "load_tvg",
    "loads_tvg",
    "read_tvg",
    "save_tvg",

    # Configuration
    "RunConfig",
    "load_config",
]
