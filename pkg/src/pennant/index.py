"""Immutable inverted index over descriptor sets, with binary persistence.

Document ordinals are assigned by sorting doc_ids, so the same corpus
always produces the same index no matter the order records arrived in.

Index file layout (little-endian throughout):

    magic   5 bytes  b"PNNT1"
    version 1 byte   0x01
    flags   1 byte   bit0 trim, bit1 fold_case, bit2 drop_empty_docs
    n_docs  u64
    vocab   u64      number of terms
    per term, in ascending term order:
        term_len u32, term bytes (UTF-8)
        df       u64
        count    u64, then `count` varint posting deltas
                 (first delta = first ordinal, then successive gaps)

Varints are unsigned LEB128: 7 payload bits per byte, high bit set on
continuation bytes.
"""

from __future__ import annotations

import io
import struct
from bisect import bisect_left
from dataclasses import dataclass
from pathlib import Path
from typing import BinaryIO

from .corpus import Corpus, NormalizationPolicy
from .errors import (
    IndexCorruptError,
    IndexFormatError,
    UnknownTermError,
    UnsupportedVersionError,
)

MAGIC = b"PNNT1"
VERSION = 0x01


@dataclass(frozen=True)
class BuildMeta:
    """Settings the index was built under; persisted in the flags byte."""

    trim: bool = True
    fold_case: bool = False
    drop_empty_docs: bool = True

    def normalize(self, term: str) -> str:
        return NormalizationPolicy(trim=self.trim, fold_case=self.fold_case).apply(term)


class TermIndex:
    """Vocabulary, document frequencies and postings for one corpus.

    Immutable after construction: readers may share an instance freely
    across threads.
    """

    def __init__(
        self,
        n_docs: int,
        postings: dict[str, tuple[int, ...]],
        build_meta: BuildMeta = BuildMeta(),
    ):
        self.n_docs = n_docs
        self._postings = postings
        self.build_meta = build_meta
        self._vocab: tuple[str, ...] = tuple(sorted(postings))
        self.max_df = max((len(p) for p in postings.values()), default=0)

    # -- basic queries -------------------------------------------------

    def __contains__(self, term: str) -> bool:
        return term in self._postings

    def __len__(self) -> int:
        return len(self._postings)

    def vocabulary(self) -> tuple[str, ...]:
        return self._vocab

    def df(self, term: str) -> int:
        return len(self.postings(term))

    def postings(self, term: str) -> tuple[int, ...]:
        try:
            return self._postings[term]
        except KeyError:
            raise UnknownTermError(term) from None

    def terms_with_prefix(self, prefix: str, limit: int | None = None):
        """Vocabulary terms starting with prefix (normalized the same way
        the indexed terms were), ascending, as (term, df) pairs."""
        if limit is not None and limit < 0:
            raise ValueError("limit must be >= 0")
        prefix = self.build_meta.normalize(prefix)
        out: list[tuple[str, int]] = []
        pos = bisect_left(self._vocab, prefix)
        for term in self._vocab[pos:]:
            if not term.startswith(prefix):
                break
            out.append((term, self.df(term)))
            if limit is not None and len(out) >= limit:
                break
        return out

    # -- co-occurrence -------------------------------------------------

    def cooccurrence(self, a: str, b: str) -> int:
        """Number of documents carrying both terms (Boolean AND).

        Symmetric; cooccurrence(t, t) == df(t).
        """
        pa, pb = self.postings(a), self.postings(b)
        return _intersection_size(pa, pb)

    def rank_cooccurring(
        self, seed: str, min_co: int = 1, top_k: int | None = None
    ) -> list[CoocEntry]:
        """All terms co-occurring with seed at least min_co times.

        Sorted by co-count descending, ties by term ascending; truncated
        to top_k when given. The seed itself is excluded.
        """
        if min_co < 1:
            raise ValueError("min_co must be >= 1")
        if top_k is not None and top_k < 0:
            raise ValueError("top_k must be >= 0")
        seed_docs = set(self.postings(seed))
        entries: list[CoocEntry] = []
        for term in self._vocab:
            if term == seed:
                continue
            co = sum(1 for d in self._postings[term] if d in seed_docs)
            if co >= min_co:
                entries.append(CoocEntry(term, co))
        entries.sort(key=lambda e: (-e.co_count, e.term))
        if top_k is not None:
            del entries[top_k:]
        return entries

    # -- equality (field-for-field, used by round-trip tests) -----------

    def __eq__(self, other) -> bool:
        if not isinstance(other, TermIndex):
            return NotImplemented
        return (
            self.n_docs == other.n_docs
            and self.build_meta == other.build_meta
            and self._postings == other._postings
        )


@dataclass(frozen=True)
class CoocEntry:
    """A term with its co-occurrence count against the current seed."""

    term: str
    co_count: int


def _intersection_size(pa: tuple[int, ...], pb: tuple[int, ...]) -> int:
    """Size of the intersection of two strictly increasing sequences."""
    i = j = n = 0
    la, lb = len(pa), len(pb)
    while i < la and j < lb:
        da, db = pa[i], pb[j]
        if da == db:
            n += 1
            i += 1
            j += 1
        elif da < db:
            i += 1
        else:
            j += 1
    return n


def build_index(corpus: Corpus) -> TermIndex:
    """Build a TermIndex from an ingested corpus.

    Deterministic: record order never matters because ordinals follow
    sorted doc_ids.
    """
    docs = sorted(corpus.docs, key=lambda d: d.doc_id)
    postings: dict[str, list[int]] = {}
    for ordinal, doc in enumerate(docs):
        for term in doc.terms:
            postings.setdefault(term, []).append(ordinal)
    frozen = {t: tuple(p) for t, p in postings.items()}
    meta = BuildMeta(trim=corpus.norm.trim, fold_case=corpus.norm.fold_case)
    return TermIndex(n_docs=len(docs), postings=frozen, build_meta=meta)


# -- persistence -------------------------------------------------------


def _write_varint(out: BinaryIO, value: int) -> None:
    while True:
        byte = value & 0x7F
        value >>= 7
        if value:
            out.write(bytes((byte | 0x80,)))
        else:
            out.write(bytes((byte,)))
            return


def _read_varint(data: bytes, pos: int) -> tuple[int, int]:
    result = shift = 0
    while True:
        if pos >= len(data):
            raise IndexCorruptError("truncated varint")
        byte = data[pos]
        pos += 1
        result |= (byte & 0x7F) << shift
        if not byte & 0x80:
            return result, pos
        shift += 7


def save_index(index: TermIndex, sink: BinaryIO | str | Path) -> None:
    """Write the index in the PNNT1 binary format."""
    if not hasattr(sink, "write"):
        with open(sink, "wb") as fh:
            save_index(index, fh)
        return
    out: BinaryIO = sink
    meta = index.build_meta
    flags = (meta.trim << 0) | (meta.fold_case << 1) | (meta.drop_empty_docs << 2)
    out.write(MAGIC)
    out.write(bytes((VERSION, flags)))
    out.write(struct.pack("<QQ", index.n_docs, len(index)))
    for term in index.vocabulary():
        encoded = term.encode("utf-8")
        out.write(struct.pack("<I", len(encoded)))
        out.write(encoded)
        docs = index.postings(term)
        out.write(struct.pack("<QQ", len(docs), len(docs)))
        prev = None
        for d in docs:
            _write_varint(out, d if prev is None else d - prev)
            prev = d
    out.flush()


def index_to_bytes(index: TermIndex) -> bytes:
    buf = io.BytesIO()
    save_index(index, buf)
    return buf.getvalue()


def load_index(source: BinaryIO | str | Path | bytes) -> TermIndex:
    """Read an index written by save_index.

    Raises IndexFormatError on a bad magic, UnsupportedVersionError on a
    version mismatch, IndexCorruptError on truncation or inconsistency.
    """
    if isinstance(source, (str, Path)):
        with open(source, "rb") as fh:
            data = fh.read()
    elif isinstance(source, bytes):
        data = source
    else:
        data = source.read()

    if len(data) < len(MAGIC) or data[: len(MAGIC)] != MAGIC:
        raise IndexFormatError("not a pennant index file (bad magic)")
    if len(data) < len(MAGIC) + 2:
        raise IndexCorruptError("truncated header")
    version = data[len(MAGIC)]
    if version != VERSION:
        raise UnsupportedVersionError(found=version, supported=VERSION)
    flags = data[len(MAGIC) + 1]
    meta = BuildMeta(
        trim=bool(flags & 1),
        fold_case=bool(flags & 2),
        drop_empty_docs=bool(flags & 4),
    )
    pos = len(MAGIC) + 2

    def take(fmt: str):
        nonlocal pos
        size = struct.calcsize(fmt)
        if pos + size > len(data):
            raise IndexCorruptError("truncated data")
        values = struct.unpack_from(fmt, data, pos)
        pos += size
        return values

    n_docs, vocab_count = take("<QQ")
    postings: dict[str, tuple[int, ...]] = {}
    prev_term: str | None = None
    for _ in range(vocab_count):
        (term_len,) = take("<I")
        if pos + term_len > len(data):
            raise IndexCorruptError("truncated term")
        try:
            term = data[pos : pos + term_len].decode("utf-8")
        except UnicodeDecodeError as exc:
            raise IndexCorruptError("term is not valid UTF-8") from exc
        pos += term_len
        if prev_term is not None and term <= prev_term:
            raise IndexCorruptError("terms out of order")
        prev_term = term
        df, count = take("<QQ")
        if df != count:
            raise IndexCorruptError(f"df/postings mismatch for term {term!r}")
        docs = []
        prev = None
        for _ in range(count):
            delta, pos = _read_varint(data, pos)
            if prev is None:
                prev = delta
            else:
                if delta == 0:
                    raise IndexCorruptError("postings not strictly increasing")
                prev += delta
            docs.append(prev)
        if docs and docs[-1] >= n_docs:
            raise IndexCorruptError(f"posting beyond n_docs for term {term!r}")
        postings[term] = tuple(docs)
    if pos != len(data):
        raise IndexCorruptError("trailing bytes after index data")
    return TermIndex(n_docs=n_docs, postings=postings, build_meta=meta)
