"""
Corpus parsers: canonical line-delimited records and SNAP-style file pairs.
"""
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import ValidationError

from ..core.errors import CorpusParseError, InputError
from .records import Corpus, PaperRecord, normalize_authors

logger = logging.getLogger(__name__)


def _describe(error: ValidationError) -> str:
    first = error.errors()[0]
    location = ".".join(str(part) for part in first.get("loc", ())) or "record"
    return f"{location}: {first.get('msg', 'invalid value')}"


def parse_corpus_records(lines: Iterable[str], source: Optional[str] = None) -> Corpus:
    """
    Parse canonical corpus records.

    Each non-blank line is a JSON object with keys ``id``, ``date``
    ("YYYY-MM-DD" or "YYYY-MM"), ``authors`` and ``refs``. A repeated id
    replaces the earlier record; a record without authors is rejected.

    Args:
        lines: Text lines of the corpus
        source: Name used in error messages

    Returns:
        Parsed corpus

    Raises:
        CorpusParseError: On a malformed line
    """
    corpus = Corpus()
    for line_number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as e:
            raise CorpusParseError(f"invalid JSON: {e.msg}", line_number, source) from None
        if not isinstance(obj, dict):
            raise CorpusParseError("expected a JSON object", line_number, source)

        authors = obj.get("authors")
        if isinstance(authors, list) and not normalize_authors(
                a for a in authors if isinstance(a, str)):
            corpus.rejected += 1
            logger.warning(
                f"Rejected record without authors at line {line_number}",
                extra={"source": source, "line": line_number, "paper_id": obj.get("id")},
            )
            continue

        try:
            paper = PaperRecord.model_validate(obj)
        except ValidationError as e:
            raise CorpusParseError(_describe(e), line_number, source) from None

        if paper.paper_id in corpus:
            logger.warning(f"Duplicate paper id {paper.paper_id!r} at line {line_number}, last record wins")
        corpus.add(paper)

    _log_summary(corpus, source)
    return corpus


def parse_snap_pair(citation_lines: Iterable[str], metadata_lines: Iterable[str],
                    citation_source: Optional[str] = None,
                    metadata_source: Optional[str] = None) -> Corpus:
    """
    Parse a SNAP-style citation file together with a metadata file.

    Citation lines are ``citing<TAB>cited``; metadata lines are
    ``paper_id<TAB>YYYY-MM-DD<TAB>author1;author2;...``. Lines starting with
    ``#`` are comments. Papers that appear in citations but have no metadata
    are dropped and counted; references to them stay dangling.

    Raises:
        CorpusParseError: On an unparseable line in either file
    """
    metadata: Dict[str, Tuple[int, str, List[str]]] = {}
    rejected = duplicates = 0
    for line_number, fields in _data_lines(metadata_lines):
        if len(fields) != 3:
            raise CorpusParseError(
                f"expected 3 tab-separated fields (id, date, authors), got {len(fields)}",
                line_number, metadata_source)
        paper_id, date_text, author_text = (part.strip() for part in fields)
        authors = [name for name in author_text.split(";") if name.strip()]
        if not authors:
            rejected += 1
            logger.warning(f"Rejected metadata without authors at line {line_number}",
                           extra={"source": metadata_source, "paper_id": paper_id})
            continue
        if paper_id in metadata:
            duplicates += 1
        metadata[paper_id] = (line_number, date_text, authors)

    references: Dict[str, List[str]] = {paper_id: [] for paper_id in metadata}
    missing = set()
    for line_number, fields in _data_lines(citation_lines, split_on_tab=False):
        if len(fields) != 2:
            raise CorpusParseError(
                f"expected 'citing<TAB>cited', got {len(fields)} fields",
                line_number, citation_source)
        citing, cited = fields
        if cited not in metadata:
            missing.add(cited)
        if citing not in metadata:
            missing.add(citing)
            continue
        references[citing].append(cited)

    corpus = Corpus(duplicates=duplicates, rejected=rejected, dropped=len(missing))
    for paper_id, (line_number, date_text, authors) in metadata.items():
        try:
            paper = PaperRecord(id=paper_id, date=date_text, authors=authors,
                                refs=references[paper_id])
        except ValidationError as e:
            raise CorpusParseError(f"paper {paper_id!r}: {_describe(e)}", line_number,
                                   metadata_source) from None
        corpus.papers[paper_id] = paper

    if missing:
        logger.warning(f"Dropped {len(missing)} cited or citing papers without metadata",
                       extra={"source": citation_source, "dropped": len(missing)})
    _log_summary(corpus, metadata_source)
    return corpus


def read_corpus(paths: Sequence[Union[str, Path]], input_format: str = "canonical") -> Corpus:
    """
    Read a corpus from files.

    Args:
        paths: One canonical file, or (citations, metadata) for ``snap``
        input_format: ``canonical`` or ``snap``

    Raises:
        InputError: On missing files or a wrong number of paths
        CorpusParseError: On malformed content
    """
    paths = [Path(p) for p in paths]
    for path in paths:
        if not path.is_file():
            raise InputError(f"input file does not exist: {path}", None, str(path))

    if input_format == "canonical":
        if len(paths) != 1:
            raise InputError(f"canonical input takes exactly one file, got {len(paths)}")
        with open(paths[0], "r", encoding="utf-8") as f:
            return parse_corpus_records(f, source=str(paths[0]))

    if input_format == "snap":
        if len(paths) != 2:
            raise InputError(f"snap input takes a citations file and a metadata file, got {len(paths)}")
        citations, metadata = paths
        with open(citations, "r", encoding="utf-8") as cf, open(metadata, "r", encoding="utf-8") as mf:
            return parse_snap_pair(cf, mf, str(citations), str(metadata))

    raise InputError(f"unknown input format {input_format!r}")


def _data_lines(lines: Iterable[str], split_on_tab: bool = True):
    for line_number, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        fields = line.split("\t") if split_on_tab else line.split()
        yield line_number, fields


def _log_summary(corpus: Corpus, source: Optional[str]) -> None:
    logger.info(
        f"Parsed {len(corpus)} papers from {source or '<stream>'}",
        extra={"papers": len(corpus), "duplicates": corpus.duplicates,
               "rejected": corpus.rejected, "dropped": corpus.dropped},
    )
