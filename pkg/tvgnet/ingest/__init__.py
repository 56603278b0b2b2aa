"""
Corpus ingestion and interaction network construction.
"""
from .builder import (
    BuildPolicy,
    CorpusStats,
    WeightEventTime,
    build_interaction_network,
    corpus_stats,
    filter_by_strength,
    is_self_citation,
)
from .parsers import parse_corpus_records, parse_snap_pair, read_corpus
from .records import Corpus, PaperRecord, normalize_author, normalize_authors

__all__ = [
    "BuildPolicy",
    "Corpus",
    "CorpusStats",
    "PaperRecord",
    "WeightEventTime",
    "build_interaction_network",
    "corpus_stats",
    "filter_by_strength",
    "is_self_citation",
    "normalize_author",
    "normalize_authors",
    "parse_corpus_records",
    "parse_snap_pair",
    "read_corpus",
]
