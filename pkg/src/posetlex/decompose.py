"""Order-autonomous sets and the decomposition fast path for the GPC.

An autonomous set relates uniformly to every outside element, so it can be
contracted to a single point: the poset is then the lexicographic sum of
the contracted base with the induced factor.  A gold-partition witness
found on a (smaller) factor lifts to the whole poset at exact k-multiples,
which is much cheaper than searching the full comparison grid.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from . import conjectures, lexsum
from .errors import SizeCapError
from .poset import ISO_CAP, Poset, are_isomorphic

#: Subset-sweep cap for autonomous-set detection.
AUTONOMY_CAP = 20


def is_autonomous(poset, members):
    """True when every outside element relates uniformly to ``members``."""
    mask = 0
    for v in members:
        mask |= 1 << v
    for z in range(poset.n):
        if mask >> z & 1:
            continue
        up = poset.above_mask(z) & mask
        down = poset.below_mask(z) & mask
        if up not in (0, mask) or down not in (0, mask):
            return False
    return True


def autonomous_sets(poset):
    """All non-trivial autonomous sets, ascending by size then by bitmask.

    Non-trivial means more than one element but not the whole poset.
    """
    if poset.n > AUTONOMY_CAP:
        raise SizeCapError(f"autonomous-set sweep capped at {AUTONOMY_CAP}")
    out = []
    for size in range(2, poset.n):
        found = []
        for members in itertools.combinations(range(poset.n), size):
            if is_autonomous(poset, members):
                mask = 0
                for v in members:
                    mask |= 1 << v
                found.append((mask, members))
        found.sort()
        out.extend(AutonomousSet(m) for _, m in found)
    return out


@dataclass(frozen=True)
class AutonomousSet:
    members: tuple


@dataclass(frozen=True)
class Decomposition:
    """P written as base o_index factor, with maps back into P.

    ``members`` are the P-elements contracted into the factor (ascending);
    ``base_elements[j]`` is the P-element that base point j stands for,
    the contracted point being represented by min(members).
    """

    base: Poset
    index: int
    factor: Poset
    members: tuple
    base_elements: tuple


def decompose(poset):
    """One non-trivial split of the poset, or None when indecomposable.

    Prefers the smallest autonomous set inducing a non-chain factor (the
    interesting direction for witness lifting); when every factor is a
    chain, falls back to the smallest autonomous set overall.  Ties break
    by bitmask.  The round trip is verified against the original poset.
    """
    if poset.n > AUTONOMY_CAP:
        raise SizeCapError(f"decompose capped at {AUTONOMY_CAP}")
    chosen = _first_nonchain_autonomous_set(poset)
    if chosen is None:
        for size in range(2, poset.n):
            found = []
            for members in itertools.combinations(range(poset.n), size):
                if is_autonomous(poset, members):
                    mask = 0
                    for v in members:
                        mask |= 1 << v
                    found.append((mask, members))
            if found:
                chosen = min(found)[1]
                break
    if chosen is None:
        return None
    members = tuple(chosen)
    representative = members[0]
    base_elements = tuple(
        v for v in range(poset.n) if v == representative or v not in members
    )
    base = poset.induced(base_elements)
    index = base_elements.index(representative)
    factor = poset.induced(members)
    _verify_round_trip(poset, base, index, factor)
    return Decomposition(base, index, factor, members, base_elements)


def _verify_round_trip(poset, base, index, factor):
    rebuilt = lexsum.compose_at(base, index, factor).poset
    if poset.n <= ISO_CAP:
        ok = are_isomorphic(rebuilt, poset)
    else:
        ok = _fingerprint(rebuilt) == _fingerprint(poset)
    if not ok:
        raise AssertionError("decomposition round trip failed")


def _fingerprint(poset):
    from . import linext

    degrees = sorted(
        (poset.below_mask(v).bit_count(), poset.above_mask(v).bit_count())
        for v in range(poset.n)
    )
    return (poset.n, tuple(degrees), linext.count_extensions(poset), poset.width())


def gpc_via_decomposition(poset, strict=False):
    """Gold-partition witness for P, through a non-chain factor when one exists.

    Recurses into the factor (which may itself decompose) and lifts the
    witness; falls back to the direct search when the poset is
    indecomposable or every available factor is a chain.  Returns None only
    if the direct check fails, which would refute the conjecture.
    """
    members = None
    if poset.n <= AUTONOMY_CAP:
        members = _first_nonchain_autonomous_set(poset)
    if members is None:
        return conjectures.check_gpc(poset, strict=strict)
    factor = poset.induced(members)
    inner = gpc_via_decomposition(factor, strict=strict)
    if inner is None:
        return None
    return lexsum.lift_witness(poset, members, factor, inner)


def _first_nonchain_autonomous_set(poset):
    """Smallest autonomous set (ties by bitmask) inducing a non-chain factor."""
    for size in range(2, poset.n):
        found = []
        for members in itertools.combinations(range(poset.n), size):
            if is_autonomous(poset, members) and not poset.induced(members).is_chain():
                mask = 0
                for v in members:
                    mask |= 1 << v
                found.append((mask, members))
        if found:
            return min(found)[1]
    return None
