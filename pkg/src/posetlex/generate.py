"""Generation of posets: exhaustive labeled enumeration and random sampling."""

from __future__ import annotations

import random

from .poset import Poset


def ideals(poset):
    """All down-sets of the poset as bitmasks (subset-filter; small n only)."""
    n = poset.n
    preds = [poset.below_mask(e) for e in range(n)]
    out = []
    for mask in range(1 << n):
        if all(not preds[e] & ~mask for e in range(n) if mask >> e & 1):
            out.append(mask)
    return out


def filters(poset):
    """All up-sets of the poset as bitmasks."""
    n = poset.n
    succs = [poset.above_mask(e) for e in range(n)]
    out = []
    for mask in range(1 << n):
        if all(not succs[e] & ~mask for e in range(n) if mask >> e & 1):
            out.append(mask)
    return out


def labeled_posets(n):
    """Yield every labeled poset on 0..n-1 exactly once.

    Recursive one-point extension: a poset on k+1 points restricts uniquely
    to 0..k-1, so extending every poset on k points by every admissible
    (down-set, up-set) pair for the new point enumerates without repeats.
    The admissible pairs are those already forced transitive: every chosen
    predecessor must sit below every chosen successor.
    """
    if n < 1:
        return
    if n == 1:
        yield Poset.antichain(1)
        return
    for small in labeled_posets(n - 1):
        k = small.n
        full = (1 << k) - 1
        ups = filters(small)
        for down in ideals(small):
            allowed = full
            rest = down
            while rest:
                low = rest & -rest
                allowed &= small.above_mask(low.bit_length() - 1)
                rest ^= low
            for up in ups:
                if up & ~allowed:
                    continue
                rows = [
                    small.lt[a] | (1 << k if down >> a & 1 else 0)
                    for a in range(k)
                ]
                rows.append(up)
                yield Poset(k + 1, rows, _trusted=True)


def all_labeled_posets(max_n):
    """Yield (n, poset) for every labeled poset on 1..max_n elements."""
    for n in range(1, max_n + 1):
        for poset in labeled_posets(n):
            yield n, poset


def random_poset(n, rng=None, edge_probability=0.35):
    """A random poset: closure of a random index-ordered DAG, relabeled."""
    rng = rng or random.Random()
    pairs = [
        (i, j)
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < edge_probability
    ]
    poset = Poset.from_relations(n, pairs)
    perm = list(range(n))
    rng.shuffle(perm)
    return poset.relabel(perm)


def random_nonchain_poset(n, rng=None, edge_probability=0.35):
    """A random poset guaranteed not to be a chain (n must be at least 2)."""
    rng = rng or random.Random()
    while True:
        poset = random_poset(n, rng, edge_probability)
        if not poset.is_chain():
            return poset
