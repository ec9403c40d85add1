"""The two coordinate formulas: tf of a co-occurrence count, idf of a
total document frequency.

Both are logarithmic. The base only rescales values (it never changes
any ordering), so it is a parameter with a readable default of 10.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidNError, WeightDomainError

DEFAULT_BASE = 10.0


def logb(x: float, base: float) -> float:
    """Logarithm of x in the given base.

    log10/log2 hit the platform's correctly-rounded paths; the general
    form is exact for base e because math.log(math.e) == 1.0.
    """
    if base == 10.0:
        return math.log10(x)
    if base == 2.0:
        return math.log2(x)
    return math.log(x) / math.log(base)


def _check_base(base: float) -> None:
    if not base > 1.0:
        raise ValueError(f"log base must be > 1, got {base}")


def tf_weight(count: int, base: float = DEFAULT_BASE) -> float:
    """log(count) + 1 of a co-occurrence count.

    Strictly increasing; tf_weight(1) == 1. Zero counts are outside the
    domain: only non-zero co-occurrences are ever materialized.
    """
    _check_base(base)
    if count < 1:
        raise WeightDomainError(f"co-occurrence count must be >= 1, got {count}")
    return logb(count, base) + 1.0


def idf_weight(df: int, n: int, base: float = DEFAULT_BASE) -> float:
    """log(N/df) of a total document frequency.

    Strictly decreasing in df; idf_weight(n, n) == 0.
    """
    _check_base(base)
    if df < 1:
        raise WeightDomainError(f"document frequency must be >= 1, got {df}")
    if df > n:
        raise InvalidNError(f"df {df} exceeds N {n}; N is too small an estimate")
    return logb(n / df, base)


@dataclass(frozen=True)
class WeightParams:
    """Log base plus the N to weight against.

    n_override lets a caller supply an external estimate of the database
    size when the indexed corpus is only a sample; it must be at least
    the largest df in the index (checked at diagram time).
    """

    log_base: float = DEFAULT_BASE
    n_docs: int | None = None
    n_override: int | None = None

    def __post_init__(self):
        _check_base(self.log_base)

    def effective_n(self, index_n_docs: int | None = None) -> int:
        if self.n_override is not None:
            return self.n_override
        if self.n_docs is not None:
            return self.n_docs
        if index_n_docs is not None:
            return index_n_docs
        raise InvalidNError("no N available: set n_docs or n_override")
