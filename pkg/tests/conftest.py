import random

import pytest

from pennant import DocRecord, build_index, ingest_corpus

# the desk-scale corpus every hand-derived expectation in this suite
# was checked against
C6 = [
    ("d1", {"A", "B"}),
    ("d2", {"A", "B", "C"}),
    ("d3", {"A", "C"}),
    ("d4", {"B", "C"}),
    ("d5", {"A"}),
    ("d6", {"C", "D"}),
]


def make_index(pairs, norm=None):
    records = (DocRecord(doc_id, frozenset(terms)) for doc_id, terms in pairs)
    return build_index(ingest_corpus(records, norm=norm))


def random_pairs(rng: random.Random, max_docs=50, max_terms=12, vocab_size=18):
    vocab = [f"T{i:02d}" for i in range(vocab_size)]
    n_docs = rng.randint(1, max_docs)
    return [
        (
            f"d{i:03d}",
            frozenset(rng.sample(vocab, rng.randint(1, min(max_terms, vocab_size)))),
        )
        for i in range(n_docs)
    ]


@pytest.fixture
def c6_pairs():
    return list(C6)


@pytest.fixture
def c6_index():
    return make_index(C6)
