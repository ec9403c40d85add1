"""Corpus ingestion: term-tagged document records in, clean document sets out.

Two on-disk formats are accepted, both UTF-8 with LF line endings:

  tsv (default):
      <doc_id> TAB <term>|<term>|...
      Lines starting with '#' and blank lines are ignored.
      The pipe separator is deliberate: curated descriptors contain
      commas and spaces ("Labor Supply", "Aliens, Illegal").

  jsonl:
      One JSON object per line with fields "id" (string) and
      "terms" (array of strings). Blank lines are ignored.

A file whose first significant line starts with '{' is read as jsonl,
anything else as tsv; pass fmt= to override.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .errors import CorpusParseError, DuplicateDocIdError


@dataclass(frozen=True)
class NormalizationPolicy:
    """How raw term strings are cleaned before indexing.

    trim strips surrounding whitespace (default on). fold_case lowercases
    (default off: descriptors are a curated vocabulary whose case is
    significant, so folding is opt-in).
    """

    trim: bool = True
    fold_case: bool = False

    def apply(self, term: str) -> str:
        if self.trim:
            term = term.strip()
        if self.fold_case:
            term = term.casefold()
        return term


@dataclass(frozen=True)
class DocRecord:
    """One document: an opaque identifier plus its set of descriptor terms."""

    doc_id: str
    terms: frozenset[str]


@dataclass
class Corpus:
    """Normalized documents ready for index building.

    Duplicate terms within a document are collapsed, documents whose term
    set ends up empty are dropped (they must not inflate N), and doc_ids
    are unique.
    """

    docs: list[DocRecord] = field(default_factory=list)
    norm: NormalizationPolicy = field(default_factory=NormalizationPolicy)
    n_empty_dropped: int = 0

    def __len__(self) -> int:
        return len(self.docs)


def ingest_corpus(
    records: Iterable[DocRecord], norm: NormalizationPolicy | None = None
) -> Corpus:
    """Normalize and collect records into a Corpus.

    Raises DuplicateDocIdError when two records share a doc_id.
    """
    norm = norm or NormalizationPolicy()
    corpus = Corpus(norm=norm)
    seen: set[str] = set()
    for rec in records:
        if not rec.doc_id:
            raise ValueError("record with empty doc_id")
        if rec.doc_id in seen:
            raise DuplicateDocIdError(rec.doc_id)
        seen.add(rec.doc_id)
        terms = frozenset(t for t in (norm.apply(raw) for raw in rec.terms) if t)
        if not terms:
            corpus.n_empty_dropped += 1
            continue
        corpus.docs.append(DocRecord(rec.doc_id, terms))
    return corpus


def _parse_tsv_line(line_no: int, line: str) -> DocRecord:
    doc_id, sep, rest = line.partition("\t")
    if not sep:
        raise CorpusParseError(line_no, "expected <doc_id><TAB><term>|<term>|...")
    if not doc_id:
        raise CorpusParseError(line_no, "missing doc_id before TAB")
    return DocRecord(doc_id, frozenset(rest.split("|")))


def _parse_jsonl_line(line_no: int, line: str) -> DocRecord:
    try:
        obj = json.loads(line)
    except json.JSONDecodeError as exc:
        raise CorpusParseError(line_no, f"invalid JSON: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise CorpusParseError(line_no, "record is not a JSON object")
    if "id" not in obj:
        raise CorpusParseError(line_no, "missing field 'id'")
    if "terms" not in obj:
        raise CorpusParseError(line_no, "missing field 'terms'")
    doc_id, terms = obj["id"], obj["terms"]
    if not isinstance(doc_id, str) or not doc_id:
        raise CorpusParseError(line_no, "field 'id' must be a non-empty string")
    if not isinstance(terms, list) or any(not isinstance(t, str) for t in terms):
        raise CorpusParseError(line_no, "field 'terms' must be an array of strings")
    return DocRecord(doc_id, frozenset(terms))


def iter_corpus_records(stream: TextIO, fmt: str | None = None) -> Iterator[DocRecord]:
    """Yield raw (unnormalized) DocRecords from an open corpus stream.

    fmt is "tsv", "jsonl", or None to sniff from the first significant line.
    """
    for line_no, raw in enumerate(stream, start=1):
        line = raw.rstrip("\n").rstrip("\r")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if fmt is None:
            fmt = "jsonl" if line.lstrip().startswith("{") else "tsv"
        if fmt == "jsonl":
            yield _parse_jsonl_line(line_no, line)
        elif fmt == "tsv":
            yield _parse_tsv_line(line_no, line)
        else:
            raise ValueError(f"unknown corpus format: {fmt!r}")


def read_corpus(
    path: str | Path,
    norm: NormalizationPolicy | None = None,
    fmt: str | None = None,
) -> Corpus:
    """Read and ingest a corpus file (tsv or jsonl, sniffed by default)."""
    with open(path, "r", encoding="utf-8") as fh:
        return ingest_corpus(iter_corpus_records(fh, fmt=fmt), norm=norm)
