import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from conftest import make_index, random_pairs
from pennant import (
    InvalidNError,
    SectorParams,
    UnknownTermError,
    WeightParams,
    classify_sector,
    compute_pennant,
    flag_dominant,
)

corpora = st.lists(
    st.frozensets(st.sampled_from("ABCDEFGH"), min_size=1, max_size=5),
    min_size=1,
    max_size=12,
)


def pairs_from(term_sets):
    return [(f"d{i:02d}", terms) for i, terms in enumerate(term_sets)]


# -- classify_sector / flag_dominant ------------------------------------


def test_sector_narrow():
    assert classify_sector(1, 4) == "A"


def test_sector_band_middle():
    assert classify_sector(3, 4) == "B"


def test_sector_far_broader():
    assert classify_sector(40, 4) == "C"


def test_sector_boundaries_inclusive():
    params = SectorParams(alpha=0.5, gamma=5.0)
    assert classify_sector(2, 4, params) == "A"  # r == alpha
    assert classify_sector(20, 4, params) == "C"  # r == gamma
    assert classify_sector(4, 4, params) == "B"


def test_sector_params_validated():
    with pytest.raises(ValueError):
        SectorParams(alpha=0.0)
    with pytest.raises(ValueError):
        SectorParams(gamma=0.9)
    with pytest.raises(ValueError):
        SectorParams(tau=1.5)
    with pytest.raises(ValueError):
        SectorParams(alpha=1.0, gamma=1.0)


def test_dominant_broad_saturating_term():
    assert flag_dominant(61, 100, 5000, SectorParams(tau=0.5)) is True


def test_dominant_requires_broader_than_seed():
    assert flag_dominant(2, 4, 3, SectorParams(tau=0.5)) is False


def test_dominant_full_rate():
    assert flag_dominant(4, 4, 5, SectorParams(tau=0.5)) is True


# -- compute_pennant on C6 ----------------------------------------------


def test_c6_seed_a_diagram(c6_index):
    d = compute_pennant(c6_index, "A", min_co=1)
    assert d.seed_x == pytest.approx(1.60206, abs=1e-5)
    assert d.seed_y == pytest.approx(0.17609, abs=1e-5)
    assert [(p.term, p.sector) for p in d.points] == [("B", "B"), ("C", "B")]
    b, c = d.points
    assert b.x == pytest.approx(1.30103, abs=1e-5)
    assert b.y == pytest.approx(0.30103, abs=1e-5)
    assert c.x == pytest.approx(1.30103, abs=1e-5)
    assert c.y == pytest.approx(0.17609, abs=1e-5)
    assert not any(p.dominant for p in d.points)


def test_c6_seed_c_has_narrow_point_d(c6_index):
    d = compute_pennant(c6_index, "C", min_co=1)
    point_d = next(p for p in d.points if p.term == "D")
    assert point_d.x == pytest.approx(1.0, abs=1e-12)
    assert point_d.y == pytest.approx(0.77815, abs=1e-5)
    assert point_d.sector == "A"


def test_high_threshold_gives_empty_diagram(c6_index):
    d = compute_pennant(c6_index, "A", min_co=50)
    assert d.points == []
    assert d.seed == "A"


def test_unknown_seed_raises(c6_index):
    with pytest.raises(UnknownTermError, match="Zed"):
        compute_pennant(c6_index, "Zed", min_co=1)


def test_n_override_below_max_df_rejected(c6_index):
    with pytest.raises(InvalidNError):
        compute_pennant(c6_index, "A", min_co=1, weights=WeightParams(n_override=3))


def test_n_override_changes_y_only(c6_index):
    plain = compute_pennant(c6_index, "A", min_co=1)
    scaled = compute_pennant(c6_index, "A", min_co=1, weights=WeightParams(n_override=60))
    assert scaled.n_docs == 60
    assert [p.term for p in scaled.points] == [p.term for p in plain.points]
    assert [p.x for p in scaled.points] == [p.x for p in plain.points]
    assert all(s.y > p.y for s, p in zip(scaled.points, plain.points))


def test_point_order_x_desc_y_desc_term_asc():
    # engineered ties: same co-counts, distinct dfs, then a lexicographic tie
    pairs = [
        ("d1", {"S", "P", "Q"}),
        ("d2", {"S", "P", "Q"}),
        ("d3", {"S", "R"}),
        ("d4", {"P"}),
        ("d5", {"Q", "R"}),
    ]
    index = make_index(pairs)
    d = compute_pennant(index, "S", min_co=1)
    assert [p.term for p in d.points] == ["P", "Q", "R"]
    keys = [(-p.x, -p.y, p.term) for p in d.points]
    assert keys == sorted(keys)


# -- properties ----------------------------------------------------------


@settings(max_examples=60)
@given(corpora)
def test_matches_oracle_on_random_corpora(term_sets):
    pairs = pairs_from(term_sets)
    index = make_index(pairs)
    for seed in index.vocabulary():
        got = compute_pennant(index, seed, min_co=1)
        want = oracle.naive_pennant(pairs, seed, min_co=1)
        assert got.seed_df == want["seed_df"]
        assert got.n_docs == want["n"]
        assert got.seed_x == pytest.approx(want["seed_x"], abs=1e-9)
        assert got.seed_y == pytest.approx(want["seed_y"], abs=1e-9)
        assert [p.term for p in got.points] == [p["term"] for p in want["points"]]
        for g, w in zip(got.points, want["points"]):
            assert g.co_count == w["co"]
            assert g.df == w["df"]
            assert g.sector == w["sector"]
            assert g.dominant == w["dominant"]
            assert g.x == pytest.approx(w["x"], abs=1e-9)
            assert g.y == pytest.approx(w["y"], abs=1e-9)


@settings(max_examples=60)
@given(corpora)
def test_seed_at_tip(term_sets):
    index = make_index(pairs_from(term_sets))
    for seed in index.vocabulary():
        d = compute_pennant(index, seed, min_co=1)
        assert all(d.seed_x >= p.x for p in d.points)


@settings(max_examples=40)
@given(corpora, st.integers(min_value=1, max_value=3))
def test_threshold_soundness_and_completeness(term_sets, min_co):
    pairs = pairs_from(term_sets)
    index = make_index(pairs)
    for seed in index.vocabulary():
        d = compute_pennant(index, seed, min_co=min_co)
        in_diagram = {p.term for p in d.points}
        for term in index.vocabulary():
            if term == seed:
                continue
            co = index.cooccurrence(seed, term)
            assert (term in in_diagram) == (co >= min_co)


@settings(max_examples=30)
@given(corpora)
def test_sectors_partition_points(term_sets):
    index = make_index(pairs_from(term_sets))
    for seed in index.vocabulary():
        d = compute_pennant(index, seed, min_co=1)
        assert all(p.sector in ("A", "B", "C") for p in d.points)


def test_scale_invariance_across_bases():
    rng = random.Random(20)
    pairs = random_pairs(rng, max_docs=40)
    index = make_index(pairs)
    for seed in index.vocabulary()[:6]:
        reference = compute_pennant(index, seed, min_co=1, weights=WeightParams(log_base=10.0))
        for base in (2.0, math.e):
            other = compute_pennant(index, seed, min_co=1, weights=WeightParams(log_base=base))
            assert [p.term for p in other.points] == [p.term for p in reference.points]
            assert [(p.sector, p.dominant) for p in other.points] == [
                (p.sector, p.dominant) for p in reference.points
            ]
