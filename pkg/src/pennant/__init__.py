"""Pennant diagrams for descriptor vocabularies.

Build an inverted index over term-tagged documents, pick a seed term,
and get every co-occurring term positioned on two logarithmic axes:
x = log(co-count)+1 (pull toward the seed), y = log(N/df) (specificity),
partitioned into sectors A/B/C and flagged for dominant broad terms.
"""

from .corpus import Corpus, DocRecord, NormalizationPolicy, ingest_corpus, read_corpus
from .diagram import (
    PennantDiagram,
    PennantParams,
    PennantPoint,
    SectorParams,
    classify_sector,
    compute_pennant,
    flag_dominant,
)
from .errors import (
    CorpusParseError,
    DuplicateDocIdError,
    IndexCorruptError,
    IndexFormatError,
    InvalidNError,
    PennantError,
    UnknownTermError,
    UnsupportedVersionError,
    WeightDomainError,
)
from .index import CoocEntry, TermIndex, build_index, index_to_bytes, load_index, save_index
from .render import RenderStyle, from_json, to_json, to_svg, to_table
from .weighting import WeightParams, idf_weight, tf_weight

__version__ = "0.1.0"

__all__ = [
    "Corpus",
    "CoocEntry",
    "CorpusParseError",
    "DocRecord",
    "DuplicateDocIdError",
    "IndexCorruptError",
    "IndexFormatError",
    "InvalidNError",
    "NormalizationPolicy",
    "PennantDiagram",
    "PennantError",
    "PennantParams",
    "PennantPoint",
    "RenderStyle",
    "SectorParams",
    "TermIndex",
    "UnknownTermError",
    "UnsupportedVersionError",
    "WeightDomainError",
    "WeightParams",
    "build_index",
    "classify_sector",
    "compute_pennant",
    "flag_dominant",
    "from_json",
    "idf_weight",
    "index_to_bytes",
    "ingest_corpus",
    "load_index",
    "read_corpus",
    "save_index",
    "tf_weight",
    "to_json",
    "to_svg",
    "to_table",
]
