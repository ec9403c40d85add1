"""Exception hierarchy shared across the package.

Everything raised on purpose derives from PennantError so callers (CLI,
service) can distinguish data problems from genuine bugs.
"""


class PennantError(Exception):
    """Base class for all errors raised by this package."""


class CorpusParseError(PennantError):
    """A corpus file record could not be parsed; message names the line."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no


class DuplicateDocIdError(PennantError):
    """Two corpus records share a doc_id."""

    def __init__(self, doc_id: str):
        super().__init__(f"duplicate doc_id {doc_id}")
        self.doc_id = doc_id


class UnknownTermError(PennantError):
    """A queried term is not in the index vocabulary."""

    def __init__(self, term: str):
        super().__init__(f"unknown term: {term}")
        self.term = term


class WeightDomainError(PennantError):
    """A weighting formula was fed a count outside its domain."""


class InvalidNError(PennantError):
    """Effective N is smaller than an observed document frequency."""


class IndexFormatError(PennantError):
    """An index file does not carry the expected magic header."""


class UnsupportedVersionError(IndexFormatError):
    """An index file has a recognized magic but a version this reader
    does not speak."""

    def __init__(self, found: int, supported: int):
        super().__init__(
            f"unsupported index version 0x{found:02x} (this reader supports 0x{supported:02x})"
        )
        self.found = found
        self.supported = supported


class IndexCorruptError(PennantError):
    """An index file is truncated or internally inconsistent."""
