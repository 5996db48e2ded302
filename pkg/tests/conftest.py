"""Shared fixtures and independent oracles for the test suite.

The oracles deliberately avoid the package's own algorithms: extensions
come from filtering all n! permutations, width from bipartite matching on
the comparability relation, and isomorphism from trying every bijection.
"""

import itertools
from pathlib import Path

import pytest

from posetlex import Poset

POSETS_DIR = Path(__file__).resolve().parent.parent / "posets"


def brute_extensions(poset):
    """Every linear extension as an element order, by n! filtering."""
    rels = poset.relation_pairs()
    out = []
    for order in itertools.permutations(range(poset.n)):
        pos = {e: i for i, e in enumerate(order)}
        if all(pos[a] < pos[b] for a, b in rels):
            out.append(order)
    return out


def brute_count(poset):
    return len(brute_extensions(poset))


def brute_width(poset):
    """Dilworth: n minus a maximum matching of the comparability DAG."""
    n = poset.n
    match_right = [-1] * n

    def augment(a, seen):
        for b in range(n):
            if poset.is_lt(a, b) and not seen[b]:
                seen[b] = True
                if match_right[b] < 0 or augment(match_right[b], seen):
                    match_right[b] = a
                    return True
        return False

    matching = sum(augment(a, [False] * n) for a in range(n))
    return n - matching


def brute_isomorphic(p, q):
    """Isomorphism by trying every relabeling bijection."""
    if p.n != q.n:
        return False
    for perm in itertools.permutations(range(p.n)):
        if all(
            p.is_lt(a, b) == q.is_lt(perm[a], perm[b])
            for a in range(p.n)
            for b in range(p.n)
            if a != b
        ):
            return True
    return False


@pytest.fixture
def n_poset():
    """The N shape: w=0 < y=2, x=1 < y=2, x=1 < z=3."""
    return Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)])


@pytest.fixture
def point_and_chain():
    """An isolated point 0 beside the chain 1 < 2."""
    return Poset.from_relations(3, [(1, 2)])
