"""Naive index-free reference implementation used as the test oracle.

Works straight off (doc_id, term-set) pairs: no inverted index, no code
shared with the package. Logarithms use math.log(x, base) so even the
evaluation path differs from the implementation under test.
"""

import math


def naive_n(pairs):
    return sum(1 for _, terms in pairs if terms)


def naive_vocab(pairs):
    vocab = set()
    for _, terms in pairs:
        vocab |= set(terms)
    return sorted(vocab)


def naive_df(pairs):
    out = {}
    for _, terms in pairs:
        for t in set(terms):
            out[t] = out.get(t, 0) + 1
    return out


def naive_cooccurrence(pairs, a, b):
    return sum(1 for _, terms in pairs if a in terms and b in terms)


def naive_rank(pairs, seed, min_co=1, top_k=None):
    entries = []
    for term in naive_vocab(pairs):
        if term == seed:
            continue
        co = naive_cooccurrence(pairs, seed, term)
        if co >= min_co:
            entries.append((term, co))
    entries.sort(key=lambda e: (-e[1], e[0]))
    if top_k is not None:
        entries = entries[:top_k]
    return entries


def naive_tf(count, base=10.0):
    return math.log(count, base) + 1.0


def naive_idf(df, n, base=10.0):
    return math.log(n / df, base)


def naive_sector(df_term, df_seed, alpha=0.5, gamma=5.0):
    r = df_term / df_seed
    if r <= alpha:
        return "A"
    if r >= gamma:
        return "C"
    return "B"


def naive_dominant(co, df_seed, df_term, tau=0.5):
    return co / df_seed >= tau and df_term > df_seed


def naive_pennant(
    pairs,
    seed,
    min_co=1,
    top_k=None,
    base=10.0,
    alpha=0.5,
    gamma=5.0,
    tau=0.5,
    n_override=None,
):
    """Full diagram as plain dicts, ordered by (x desc, y desc, term asc)."""
    n = n_override if n_override is not None else naive_n(pairs)
    df = naive_df(pairs)
    df_seed = df[seed]
    points = []
    for term, co in naive_rank(pairs, seed, min_co=min_co, top_k=top_k):
        points.append(
            {
                "term": term,
                "co": co,
                "df": df[term],
                "x": naive_tf(co, base),
                "y": naive_idf(df[term], n, base),
                "sector": naive_sector(df[term], df_seed, alpha, gamma),
                "dominant": naive_dominant(co, df_seed, df[term], tau),
            }
        )
    points.sort(key=lambda p: (-p["x"], -p["y"], p["term"]))
    return {
        "seed": seed,
        "seed_df": df_seed,
        "seed_x": naive_tf(df_seed, base),
        "seed_y": naive_idf(df_seed, n, base),
        "n": n,
        "points": points,
    }
