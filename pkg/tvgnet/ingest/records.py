"""
Publication records and corpora.
"""
import datetime as dt
import json
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..core.timeline import EPOCH, Interval, TimeInstant, parse_date, to_instant


def normalize_author(name: str) -> str:
    """Author identity: trimmed, case-folded name."""
    return name.strip().casefold()


def normalize_authors(names) -> Tuple[str, ...]:
    """Normalize and de-duplicate author names, keeping first-seen order."""
    seen = []
    for name in names:
        if not isinstance(name, str):
            raise ValueError(f"author must be a string, got {name!r}")
        normalized = normalize_author(name)
        if normalized and normalized not in seen:
            seen.append(normalized)
    return tuple(seen)


class PaperRecord(BaseModel):
    """One publication: id, publication date, authors and cited paper ids."""

    model_config = ConfigDict(frozen=True, populate_by_name=True, extra="ignore")

    paper_id: str = Field(alias="id", min_length=1)
    date: dt.date
    authors: Tuple[str, ...]
    references: Tuple[str, ...] = Field(default=(), alias="refs")

    @field_validator("paper_id", mode="before")
    @classmethod
    def _strip_id(cls, value):
        if isinstance(value, str):
            return value.strip()
        return value

    @field_validator("date", mode="before")
    @classmethod
    def _parse_date(cls, value):
        if isinstance(value, str):
            return parse_date(value)
        return value

    @field_validator("date")
    @classmethod
    def _after_epoch(cls, value: dt.date) -> dt.date:
        if value < EPOCH:
            raise ValueError(f"date {value.isoformat()} precedes {EPOCH.isoformat()}")
        return value

    @field_validator("authors", mode="before")
    @classmethod
    def _normalize_authors(cls, value):
        if isinstance(value, str):
            raise ValueError("authors must be a list of names")
        authors = normalize_authors(value)
        if not authors:
            raise ValueError("empty author list")
        return authors

    @field_validator("references", mode="before")
    @classmethod
    def _dedupe_references(cls, value):
        if isinstance(value, str):
            raise ValueError("refs must be a list of paper ids")
        refs = []
        for ref in value or ():
            ref = str(ref).strip()
            if ref and ref not in refs:
                refs.append(ref)
        return tuple(refs)

    @model_validator(mode="after")
    def _drop_self_reference(self) -> "PaperRecord":
        if self.paper_id in self.references:
            refs = tuple(ref for ref in self.references if ref != self.paper_id)
            object.__setattr__(self, "references", refs)
        return self

    @property
    def instant(self) -> TimeInstant:
        """Publication date as a time instant."""
        return to_instant(self.date)

    def to_canonical(self) -> str:
        """Render as one canonical corpus line."""
        return json.dumps({
            "authors": list(self.authors),
            "date": self.date.isoformat(),
            "id": self.paper_id,
            "refs": list(self.references),
        }, sort_keys=True, separators=(",", ":"), ensure_ascii=False)


@dataclass
class Corpus:
    """Parsed publication records plus the counters gathered while parsing."""
    papers: Dict[str, PaperRecord] = field(default_factory=dict)
    duplicates: int = 0
    rejected: int = 0
    dropped: int = 0

    def __len__(self) -> int:
        return len(self.papers)

    def __contains__(self, paper_id: object) -> bool:
        return paper_id in self.papers

    @property
    def span(self) -> Optional[Interval]:
        """[first publication, last publication + 1 day), or None when empty."""
        if not self.papers:
            return None
        instants = [paper.instant for paper in self.papers.values()]
        return Interval(min(instants), max(instants) + 1)

    def add(self, paper: PaperRecord) -> None:
        """Add a paper; a repeated id replaces the earlier record."""
        if paper.paper_id in self.papers:
            self.duplicates += 1
        self.papers[paper.paper_id] = paper

    def sorted_papers(self) -> List[PaperRecord]:
        """Papers ordered by date, then id."""
        return sorted(self.papers.values(), key=lambda p: (p.date, p.paper_id))

    def citations(self) -> Iterator[Tuple[PaperRecord, str]]:
        """Every (citing paper, cited id) pair, resolved or not, in date order."""
        for paper in self.sorted_papers():
            for ref in paper.references:
                yield paper, ref

    def resolved_citations(self) -> Iterator[Tuple[PaperRecord, PaperRecord]]:
        """(citing, cited) pairs whose cited paper is in the corpus."""
        for paper, ref in self.citations():
            cited = self.papers.get(ref)
            if cited is not None:
                yield paper, cited

    def dangling_references(self) -> int:
        """Number of references to papers outside the corpus."""
        return sum(1 for _, ref in self.citations() if ref not in self.papers)

    def authors(self) -> List[str]:
        """Distinct normalized authors, sorted."""
        return sorted({author for paper in self.papers.values() for author in paper.authors})

    def to_canonical_lines(self) -> List[str]:
        """The corpus in canonical line format, ordered by date then id."""
        return [paper.to_canonical() for paper in self.sorted_papers()]
