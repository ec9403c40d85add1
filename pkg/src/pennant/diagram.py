"""Pennant assembly: admit terms past the co-occurrence threshold, compute
their coordinates, classify specificity sectors, flag dominant broad terms.

Sectors compare a term's total document frequency to the seed's as a
ratio r = df_term / df_seed:

    A  r <= alpha   narrower than the seed: specifically related terms
    C  r >= gamma   far broader terms, typically from other hierarchies
    B  otherwise    roughly the seed's own specificity

A "dominant" term is a broader term that saturates the seed's literature
(high conditional co-occurrence rate): highly relevant, yet expensive to
act on because it discriminates nothing within the seed's documents.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidNError
from .index import TermIndex
from .weighting import DEFAULT_BASE, WeightParams, idf_weight, tf_weight

DEFAULT_MIN_CO = 50

Sector = str  # "A" | "B" | "C"


@dataclass(frozen=True)
class SectorParams:
    """Bounds for the sector bands and the dominance rate threshold."""

    alpha: float = 0.5
    gamma: float = 5.0
    tau: float = 0.5

    def __post_init__(self):
        if not 0.0 < self.alpha <= 1.0:
            raise ValueError(f"alpha must be in (0, 1], got {self.alpha}")
        if self.gamma < 1.0:
            raise ValueError(f"gamma must be >= 1, got {self.gamma}")
        if not 0.0 < self.tau <= 1.0:
            raise ValueError(f"tau must be in (0, 1], got {self.tau}")
        if not self.alpha < self.gamma:
            raise ValueError("alpha must be < gamma")


def classify_sector(df_term: int, df_seed: int, params: SectorParams | None = None) -> Sector:
    """Assign one of the three specificity sectors. Total and deterministic."""
    params = params or SectorParams()
    if df_term < 1 or df_seed < 1:
        raise ValueError("document frequencies must be >= 1")
    r = df_term / df_seed
    if r <= params.alpha:
        return "A"
    if r >= params.gamma:
        return "C"
    return "B"


def flag_dominant(
    co_count: int, df_seed: int, df_term: int, params: SectorParams | None = None
) -> bool:
    """True when a broader term saturates the seed literature.

    Requires BOTH a conditional rate co/df_seed at least tau AND
    df_term > df_seed, so a narrow synonym co-occurring everywhere is
    not mislabeled broad.
    """
    params = params or SectorParams()
    if df_seed < 1:
        raise ValueError("df_seed must be >= 1")
    return co_count / df_seed >= params.tau and df_term > df_seed


@dataclass(frozen=True)
class PennantPoint:
    """One co-occurring term positioned in weight space."""

    term: str
    co_count: int
    df: int
    x: float  # tf weight of co_count: pull toward the seed
    y: float  # idf weight of df: specificity relative to the database
    sector: Sector
    dominant: bool


@dataclass(frozen=True)
class PennantParams:
    """Effective settings echoed into every diagram."""

    log_base: float = DEFAULT_BASE
    n_override: int | None = None
    min_co: int = DEFAULT_MIN_CO
    top_k: int | None = None
    alpha: float = 0.5
    gamma: float = 5.0
    tau: float = 0.5


@dataclass(frozen=True)
class PennantDiagram:
    """A seed with its admitted co-occurring terms, ready to render.

    points are sorted by (x desc, y desc, term asc); the seed itself is
    at (seed_x, seed_y), never among the points.
    """

    seed: str
    seed_df: int
    seed_x: float
    seed_y: float
    n_docs: int  # effective N the y coordinates were computed against
    params: PennantParams
    points: list[PennantPoint] = field(default_factory=list)


def compute_pennant(
    index: TermIndex,
    seed: str,
    min_co: int = DEFAULT_MIN_CO,
    top_k: int | None = None,
    weights: WeightParams | None = None,
    sectors: SectorParams | None = None,
) -> PennantDiagram:
    """Build the full diagram for a seed term.

    The seed sits at (tf(df_seed), idf(df_seed, N)): it trivially
    co-occurs with itself in all its documents, which pins it at the tip
    because no co-count can exceed df_seed. An empty diagram (no term
    reaches min_co) is a valid result, not an error.
    """
    weights = weights or WeightParams()
    sectors = sectors or SectorParams()
    base = weights.log_base
    n = weights.effective_n(index.n_docs)
    if n < index.max_df:
        raise InvalidNError(
            f"N={n} is smaller than the largest document frequency {index.max_df}"
        )

    df_seed = index.df(seed)
    points = []
    for entry in index.rank_cooccurring(seed, min_co=min_co, top_k=top_k):
        df_term = index.df(entry.term)
        points.append(
            PennantPoint(
                term=entry.term,
                co_count=entry.co_count,
                df=df_term,
                x=tf_weight(entry.co_count, base),
                y=idf_weight(df_term, n, base),
                sector=classify_sector(df_term, df_seed, sectors),
                dominant=flag_dominant(entry.co_count, df_seed, df_term, sectors),
            )
        )
    # x desc == co desc and y desc == df asc, both exactly, because tf is
    # strictly increasing and idf strictly decreasing; sorting on the
    # integer key keeps float ties out of the ordering.
    points.sort(key=lambda p: (-p.co_count, p.df, p.term))

    return PennantDiagram(
        seed=seed,
        seed_df=df_seed,
        seed_x=tf_weight(df_seed, base),
        seed_y=idf_weight(df_seed, n, base),
        n_docs=n,
        params=PennantParams(
            log_base=base,
            n_override=weights.n_override,
            min_co=min_co,
            top_k=top_k,
            alpha=sectors.alpha,
            gamma=sectors.gamma,
            tau=sectors.tau,
        ),
        points=points,
    )
