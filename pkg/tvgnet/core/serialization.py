"""
Line-delimited serialization of time-varying graphs.

Format ``tvgnet-tvg`` version 1, one compact JSON object per line with sorted
keys::

    {"format":"tvgnet-tvg","lifetime":[0,30],"version":1}
    {"appearance":0,"node":"a"}
    {"edge":["a","b"],"intervals":[[0,30]],"weights":[[2,1],[4,1]]}

Nodes follow the header sorted by id, edges follow the nodes sorted by pair.
Identical graphs always serialize to identical bytes.
"""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional, TextIO, Union

from .errors import SerializationError, TemporalGraphError
from .timeline import Interval
from .tvg import TimeVaryingGraph

logger = logging.getLogger(__name__)

FORMAT_NAME = "tvgnet-tvg"
FORMAT_VERSION = 1


def _encode(obj: Dict[str, Any]) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


def iter_tvg_lines(g: TimeVaryingGraph) -> Iterable[str]:
    """Serialized lines of a graph, without newlines."""
    yield _encode({
        "format": FORMAT_NAME,
        "lifetime": [g.lifetime.start, g.lifetime.end],
        "version": FORMAT_VERSION,
    })
    for node in sorted(g.nodes):
        yield _encode({"appearance": g.nodes[node], "node": node})
    for key in sorted(g.edges):
        record = g.edges[key]
        yield _encode({
            "edge": list(key),
            "intervals": [[iv.start, iv.end] for iv in record.availability],
            "weights": [[t, delta] for t, delta in record.weight_events],
        })


def dump_tvg(g: TimeVaryingGraph, stream: TextIO) -> None:
    """Write a graph to a text stream."""
    for line in iter_tvg_lines(g):
        stream.write(line)
        stream.write("\n")


def dumps_tvg(g: TimeVaryingGraph) -> str:
    """Serialize a graph to a string."""
    return "".join(f"{line}\n" for line in iter_tvg_lines(g))


def load_tvg(lines: Iterable[str], source: Optional[str] = None) -> TimeVaryingGraph:
    """
    Read a serialized graph.

    Args:
        lines: Text lines of the serialized graph
        source: Name used in error messages

    Returns:
        Frozen TimeVaryingGraph

    Raises:
        SerializationError: On unknown format or version, malformed lines, or
            content that breaks a graph invariant
    """
    graph: Optional[TimeVaryingGraph] = None
    seen_edges = False

    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise SerializationError(f"invalid JSON: {e.msg}", line_number, source) from None
        if not isinstance(obj, dict):
            raise SerializationError("expected a JSON object", line_number, source)

        try:
            if graph is None:
                graph = _read_header(obj, line_number, source)
            elif "node" in obj:
                if seen_edges:
                    raise SerializationError("node line after edge lines", line_number, source)
                _read_node(graph, obj)
            elif "edge" in obj:
                seen_edges = True
                _read_edge(graph, obj, line_number, source)
            else:
                raise SerializationError("line is neither a node nor an edge", line_number, source)
        except (TemporalGraphError, TypeError, ValueError, KeyError) as e:
            raise SerializationError(f"invalid record: {e}", line_number, source) from None

    if graph is None:
        raise SerializationError(f"missing {FORMAT_NAME} header", None, source)
    return graph.freeze()


def loads_tvg(text: str) -> TimeVaryingGraph:
    """Read a serialized graph from a string."""
    return load_tvg(text.splitlines())


def save_tvg(g: TimeVaryingGraph, path: Union[str, Path]) -> Path:
    """Write a graph to a file and return its path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        dump_tvg(g, f)
    logger.debug(f"Wrote {g!r} to {path}")
    return path


def read_tvg(path: Union[str, Path]) -> TimeVaryingGraph:
    """Read a graph from a file."""
    path = Path(path)
    with open(path, "r", encoding="utf-8") as f:
        return load_tvg(f, source=str(path))


def _read_header(obj: Dict[str, Any], line_number: int, source: Optional[str]) -> TimeVaryingGraph:
    if obj.get("format") != FORMAT_NAME:
        raise SerializationError(f"not a {FORMAT_NAME} file (format={obj.get('format')!r})",
                                 line_number, source)
    if obj.get("version") != FORMAT_VERSION:
        raise SerializationError(
            f"unsupported {FORMAT_NAME} version {obj.get('version')!r} "
            f"(supported: {FORMAT_VERSION})", line_number, source)
    start, end = obj["lifetime"]
    return TimeVaryingGraph(Interval(start, end))


def _read_node(graph: TimeVaryingGraph, obj: Dict[str, Any]) -> None:
    node = obj["node"]
    if not isinstance(node, str):
        raise TypeError(f"node id must be a string, got {node!r}")
    if graph.has_node(node):
        raise ValueError(f"duplicate node {node!r}")
    graph.record_node(node, obj["appearance"])


def _read_edge(graph: TimeVaryingGraph, obj: Dict[str, Any],
               line_number: int, source: Optional[str]) -> None:
    u, v = obj["edge"]
    if graph.has_edge(u, v):
        raise ValueError(f"duplicate edge {u!r}-{v!r}")
    intervals = [Interval(start, end) for start, end in obj["intervals"]]
    if not intervals:
        raise ValueError("edge without availability")
    for interval in intervals:
        for node in (u, v):
            if graph.has_node(node) and graph.nodes[node] > interval.start:
                raise SerializationError(
                    f"edge {u!r}-{v!r} is available before node {node!r} appears",
                    line_number, source)
        graph.record_edge_presence(u, v, interval)
    previous = None
    for t, delta in obj["weights"]:
        if previous is not None and t <= previous:
            raise ValueError("weight events must be sorted by strictly increasing time")
        graph.add_weight_event(u, v, t, delta)
        previous = t
