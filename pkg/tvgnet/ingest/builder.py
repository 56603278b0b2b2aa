"""
Interaction network construction.

Authors become nodes, co-authorship on a paper links every pair of its
authors from the paper date to the end of the lifetime, and each citation a
paper receives adds one to the strength of every pair of its authors.
"""
import logging
from dataclasses import asdict, dataclass
from enum import Enum
from itertools import combinations
from typing import Any, Dict, Optional, Union

from ..core.errors import OutOfLifetimeError, TemporalGraphError
from ..core.timeline import Interval, TimeInstant, check_instant
from ..core.tvg import TimeVaryingGraph
from .records import Corpus, PaperRecord

logger = logging.getLogger(__name__)


class WeightEventTime(Enum):
    """Which publication date a citation's weight event is placed at."""
    CITING = "citing"
    CITED = "cited"


@dataclass(frozen=True)
class BuildPolicy:
    """How citations turn into weight events."""
    count_self_citations: bool = True
    weight_event_time: Union[WeightEventTime, str] = WeightEventTime.CITING

    def __post_init__(self):
        if not isinstance(self.count_self_citations, bool):
            raise TypeError("count_self_citations must be a boolean")
        # frozen dataclass: normalize the enum in place
        object.__setattr__(self, "weight_event_time", WeightEventTime(self.weight_event_time))


def is_self_citation(citing: PaperRecord, cited: PaperRecord) -> bool:
    """Whether the two papers share at least one author."""
    return not set(citing.authors).isdisjoint(cited.authors)


def build_interaction_network(corpus: Corpus, policy: Optional[BuildPolicy] = None,
                              lifetime: Optional[Interval] = None) -> TimeVaryingGraph:
    """
    Build the cited co-authorship network of a corpus.

    Papers are processed in (date, id) order. A citation whose weight event
    would fall before the cited paper appeared is placed at the cited date.

    Args:
        corpus: Parsed corpus
        policy: Self-citation and event-time policy (defaults if omitted)
        lifetime: Network lifetime; the corpus span if omitted

    Returns:
        Frozen TimeVaryingGraph

    Raises:
        OutOfLifetimeError: If a paper falls outside the given lifetime
    """
    policy = policy or BuildPolicy()
    if lifetime is None:
        lifetime = corpus.span or Interval(0, 1)
    g = TimeVaryingGraph(lifetime)

    papers = corpus.sorted_papers()
    for paper in papers:
        t = paper.instant
        for author in paper.authors:
            g.record_node(author, t)
        if len(paper.authors) < 2:
            continue
        presence = Interval(t, lifetime.end)
        for u, v in combinations(sorted(paper.authors), 2):
            g.record_edge_presence(u, v, presence)

    events = skipped = 0
    for citing, cited in corpus.resolved_citations():
        if len(cited.authors) < 2:
            continue
        if not policy.count_self_citations and is_self_citation(citing, cited):
            skipped += 1
            continue
        if policy.weight_event_time is WeightEventTime.CITING:
            t = max(citing.instant, cited.instant)
        else:
            t = cited.instant
        for u, v in combinations(sorted(cited.authors), 2):
            g.add_weight_event(u, v, t, 1)
            events += 1

    logger.info(
        f"Built interaction network: {g.number_of_nodes()} authors, {g.number_of_edges()} links",
        extra={"papers": len(papers), "weight_events": events, "skipped_self_citations": skipped,
               "lifetime": str(lifetime)},
    )
    return g.freeze()


def filter_by_strength(g: TimeVaryingGraph, threshold: int, at: TimeInstant) -> TimeVaryingGraph:
    """
    Keep the links whose strength at ``at`` is strictly above ``threshold``.

    Only nodes incident to a surviving link are kept. Surviving links keep
    their whole availability and weight history.

    Raises:
        TemporalGraphError: If threshold is negative
        OutOfLifetimeError: If ``at`` is outside the lifetime
    """
    if isinstance(threshold, bool) or not isinstance(threshold, int) or threshold < 0:
        raise TemporalGraphError(f"threshold must be a non-negative integer, got {threshold!r}")
    check_instant(at)
    if at not in g.lifetime:
        raise OutOfLifetimeError(f"instant {at} is outside lifetime {g.lifetime}")

    filtered = TimeVaryingGraph(g.lifetime)
    kept = [key for key in sorted(g.edges) if g.edges[key].weight_at(at) > threshold]
    for u, v in kept:
        for node in (u, v):
            filtered.record_node(node, g.nodes[node])
    for u, v in kept:
        record = g.edges[(u, v)]
        for interval in record.availability:
            filtered.record_edge_presence(u, v, interval)
        for t, delta in record.weight_events:
            filtered.add_weight_event(u, v, t, delta)

    logger.info(
        f"Strength filter > {threshold} at {at}: kept {filtered.number_of_nodes()} nodes, "
        f"{filtered.number_of_edges()} edges of {g.number_of_edges()}",
    )
    return filtered.freeze()


@dataclass(frozen=True)
class CorpusStats:
    """Size counters of a corpus."""
    papers: int = 0
    authors: int = 0
    citations_total: int = 0
    citations_resolved: int = 0
    dangling: int = 0
    self_citations: int = 0
    duplicates: int = 0
    rejected: int = 0
    dropped: int = 0

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def corpus_stats(corpus: Corpus) -> CorpusStats:
    """
    Count papers, normalized authors and citations of a corpus.

    ``citations_total`` counts every reference; ``dangling`` those pointing
    outside the corpus.
    """
    total = resolved = self_citations = 0
    for citing, ref in corpus.citations():
        total += 1
        cited = corpus.papers.get(ref)
        if cited is None:
            continue
        resolved += 1
        if is_self_citation(citing, cited):
            self_citations += 1

    return CorpusStats(
        papers=len(corpus),
        authors=len(corpus.authors()),
        citations_total=total,
        citations_resolved=resolved,
        dangling=total - resolved,
        self_citations=self_citations,
        duplicates=corpus.duplicates,
        rejected=corpus.rejected,
        dropped=corpus.dropped,
    )
