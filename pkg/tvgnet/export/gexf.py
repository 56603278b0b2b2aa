"""
GEXF export of static snapshots.

Documents are written with the networkx GEXF writer. The meta block carries
the package version and the last day of the snapshot window instead of the
wall-clock date, so identical snapshots give identical files.
"""
import io
import logging
from pathlib import Path
from typing import Optional, Union
from xml.etree.ElementTree import Element, SubElement

import networkx as nx
from networkx.readwrite.gexf import GEXFWriter

from .. import __version__
from ..core.snapshots import Snapshot
from ..core.timeline import Interval, format_instant
from ..core.tvg import StaticGraph
from ..utils.file_ops import write_bytes_atomic

logger = logging.getLogger(__name__)


class SnapshotGEXFWriter(GEXFWriter):
    """GEXF writer whose meta block depends only on the snapshot."""

    def __init__(self, window: Interval, description: Optional[str] = None, **kwargs):
        self.window = window
        self.description = description
        super().__init__(graph=None, **kwargs)
        # the base writer stamps <meta> with the wall-clock date
        for stale in self.xml.findall("meta"):
            self.xml.remove(stale)
        self.xml.insert(0, self.meta_element())

    def meta_element(self) -> Element:
        meta = Element("meta", lastmodifieddate=format_instant(self.window.end - 1))
        SubElement(meta, "creator").text = f"tvgnet {__version__}"
        if self.description:
            SubElement(meta, "description").text = self.description
        return meta


def gexf_graph(G: StaticGraph) -> nx.Graph:
    """
    Copy of a snapshot graph with only exportable attributes.

    Nodes carry ``label`` and ``appearance`` (ISO date); edges carry an
    integer ``weight``.
    """
    clean = nx.Graph()
    for node in sorted(G.nodes):
        attrs = {"label": str(node)}
        appearance = G.nodes[node].get("appearance")
        if appearance is not None:
            attrs["appearance"] = format_instant(appearance)
        clean.add_node(node, **attrs)
    for u, v in sorted(tuple(sorted(edge)) for edge in G.edges):
        clean.add_edge(u, v, weight=int(G.edges[u, v].get("weight", 0)))
    return clean


def gexf_bytes(snapshot: Snapshot, description: Optional[str] = None) -> bytes:
    """Render a snapshot as a GEXF 1.2 document."""
    writer = SnapshotGEXFWriter(snapshot.window, description, encoding="utf-8", prettyprint=True)
    writer.add_graph(gexf_graph(snapshot.graph))
    buffer = io.BytesIO()
    writer.write(buffer)
    return buffer.getvalue()


def write_snapshot_gexf(snapshot: Snapshot, path: Union[str, Path],
                        description: Optional[str] = None) -> Path:
    """Write a snapshot to a GEXF file."""
    written = write_bytes_atomic(path, gexf_bytes(snapshot, description))
    logger.info(f"Wrote GEXF for window {snapshot.window} to {written}",
                extra={"nodes": snapshot.graph.number_of_nodes(),
                       "edges": snapshot.graph.number_of_edges()})
    return written
