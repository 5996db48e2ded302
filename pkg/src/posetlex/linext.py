"""Linear extensions: exact counting, enumeration, order probabilities.

Counting walks the lattice of down-sets (order ideals): the number of
linear extensions equals the number of maximal chains from the empty ideal
to the full ground set, which a level-by-level dynamic program over ideal
bitmasks computes exactly in arbitrary precision.  All probabilities are
`fractions.Fraction`; floats never enter a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError, ChainError
from .poset import Poset

#: Default ceiling for explicit enumeration of L(P).
DEFAULT_ENUM_CAP = 10**7


@dataclass(frozen=True)
class LinearExtension:
    """A bijective order-preserving labeling of a poset into 1..n.

    ``labels[e]`` is the rank of element e.  ``order`` lists the elements
    by increasing rank.
    """

    labels: tuple

    @classmethod
    def from_order(cls, order):
        labels = [0] * len(order)
        for rank, e in enumerate(order, start=1):
            labels[e] = rank
        return cls(tuple(labels))

    @property
    def order(self):
        return tuple(sorted(range(len(self.labels)), key=self.labels.__getitem__))

    def respects(self, poset):
        return all(
            self.labels[a] < self.labels[b] for a, b in poset.relation_pairs()
        )


@dataclass(frozen=True)
class PairCountMatrix:
    """counts[x][y] = number of extensions placing x before y; total = e(P)."""

    counts: tuple
    total: int


def count_extensions(poset):
    """Exact e(P) via the ideal-lattice dynamic program."""
    n = poset.n
    preds = [poset.below_mask(e) for e in range(n)]
    full = (1 << n) - 1
    level = {0: 1}
    for _ in range(n):
        nxt = {}
        for ideal, ways in level.items():
            free = full & ~ideal
            while free:
                low = free & -free
                free ^= low
                if preds[low.bit_length() - 1] & ~ideal:
                    continue
                grown = ideal | low
                nxt[grown] = nxt.get(grown, 0) + ways
        level = nxt
    return level[full]


def enumerate_extensions(poset, cap=DEFAULT_ENUM_CAP):
    """All of L(P) as LinearExtension values, in deterministic order.

    At every step the currently minimal elements are taken in ascending
    index order, so the output order is reproducible.  Raises
    CapExceededError when e(P) exceeds ``cap``.
    """
    total = count_extensions(poset)
    if total > cap:
        raise CapExceededError(f"e(P) = {total} exceeds enumeration cap {cap}")
    n = poset.n
    preds = [poset.below_mask(e) for e in range(n)]
    out = []
    order = []

    def rec(placed):
        if len(order) == n:
            out.append(LinearExtension.from_order(order))
            return
        for e in range(n):
            if not placed >> e & 1 and not preds[e] & ~placed:
                order.append(e)
                rec(placed | (1 << e))
                order.pop()

    rec(0)
    return out


def pair_counts(poset, cap=DEFAULT_ENUM_CAP):
    """Exact before/after counts for every ordered pair.

    Below the enumeration cap the counts come from one pass over L(P);
    above it each incomparable pair is recounted by the ideal DP with the
    pair forced.  Both routes agree exactly.
    """
    n = poset.n
    total = count_extensions(poset)
    counts = [[0] * n for _ in range(n)]
    if total <= cap:
        for ext in enumerate_extensions(poset, cap):
            lab = ext.labels
            for x in range(n):
                for y in range(n):
                    if x != y and lab[x] < lab[y]:
                        counts[x][y] += 1
    else:
        for x in range(n):
            for y in range(n):
                if x == y:
                    continue
                if poset.is_lt(x, y):
                    counts[x][y] = total
                elif not poset.is_lt(y, x) and x < y:
                    c = count_extensions(poset.with_relation(x, y))
                    counts[x][y] = c
                    counts[y][x] = total - c
    return PairCountMatrix(tuple(tuple(row) for row in counts), total)


def prob(poset, x, y):
    """P(x before y) over uniformly random linear extensions, exactly."""
    if x == y:
        raise ValueError("prob needs two distinct elements")
    if poset.is_lt(x, y):
        return Fraction(1)
    if poset.is_lt(y, x):
        return Fraction(0)
    total = count_extensions(poset)
    before = count_extensions(poset.with_relation(x, y))
    return Fraction(before, total)


def delta(poset, cap=DEFAULT_ENUM_CAP):
    """max over pairs of min{P(x<y), P(y<x)} with its achieving pair.

    Ties break to the lexicographically smallest (x, y).  Chains have no
    incomparable pair, so the max is empty and ChainError is raised.
    """
    if poset.is_chain():
        raise ChainError("delta is undefined on chains")
    matrix = pair_counts(poset, cap)
    total = matrix.total
    best = None
    best_pair = None
    for x, y in poset.incomparable_pairs():
        value = Fraction(min(matrix.counts[x][y], matrix.counts[y][x]), total)
        if best is None or value > best:
            best, best_pair = value, (x, y)
    return best, best_pair


def balanced_pair(poset, cap=DEFAULT_ENUM_CAP):
    """First incomparable pair with P(x<y) in [1/3, 2/3], or None.

    None would be a counterexample to the 1/3-2/3 conjecture; callers are
    expected to surface it loudly.
    """
    if poset.is_chain():
        raise ChainError("balanced_pair is undefined on chains")
    low, high = Fraction(1, 3), Fraction(2, 3)
    for x, y in poset.incomparable_pairs():
        p = prob(poset, x, y)
        if low <= p <= high:
            return (x, y), p
    return None
