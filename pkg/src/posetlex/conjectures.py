"""Decision procedures: balanced pairs, gold partition, sorting cost.

The gold partition check looks for two consecutive comparisons whose
remaining-extension counts split like the golden identity phi^2 = phi + 1:
for every outcome of the first comparison, t0 >= t1 + t2, where t1 counts
the extensions surviving that outcome and t2 the worst result of a second
comparison chosen inside it.  When the first comparison already leaves a
chain, the second comparison is vacuous and t2 = 1 (the one extension).
Witnesses in this form always have a balanced first pair: a non-chain
branch has t2 >= ceil(t1/2), forcing t1 <= 2*t0/3, and a chain branch
forces t0 <= 3.

Two readings of "consecutive" are implemented: adaptive (the second pair
may depend on the first result, the default) and nonadaptive (one second
pair serves both results).  A strict variant (t0 > t1 + t2, vacuous t2
counted as 0) is kept behind ``strict``; note that under it no poset with
exactly three extensions can pass, so it is not the default.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linext
from .errors import ChainError, SizeCapError

#: Game-tree size cap for exact sorting cost.
SORT_COST_CAP = 8

_sort_cost_memo = {}


@dataclass(frozen=True)
class GpcBranch:
    """One outcome of the first comparison."""

    result: tuple  # oriented first pair (smaller, larger) for this outcome
    t1: int
    second: tuple | None  # oriented second pair, None when vacuous
    t2: int


@dataclass(frozen=True)
class GpcWitness:
    first: tuple
    t0: int
    branches: tuple  # two GpcBranch values, one per outcome
    strict: bool = False

    def holds(self):
        if self.strict:
            return all(self.t0 > b.t1 + b.t2 for b in self.branches)
        return all(self.t0 >= b.t1 + b.t2 for b in self.branches)

    def to_json_dict(self):
        return {
            "first": list(self.first),
            "t0": self.t0,
            "strict": self.strict,
            "branches": [
                {
                    "result": list(b.result),
                    "t1": b.t1,
                    "second": list(b.second) if b.second else None,
                    "t2": b.t2,
                }
                for b in self.branches
            ],
        }


def _partition_ok(t0, t1, t2, strict):
    return t0 > t1 + t2 if strict else t0 >= t1 + t2


def _branch_second(outcome, t0, t1, strict):
    """First admissible second comparison for one outcome poset.

    Scans pairs in ascending index order and returns (second, t2) for the
    first one satisfying the partition inequality, or None when no pair
    works.  For chains the second comparison is vacuous: it leaves the one
    surviving extension, so t2 = 1 (0 under the strict reading, which
    shifts every vacuous count down by one).
    """
    if outcome.is_chain():
        t2 = 0 if strict else 1
        return ((None, t2) if _partition_ok(t0, t1, t2, strict) else None)
    for c, d in outcome.incomparable_pairs():
        t2 = max(
            linext.count_extensions(outcome.with_relation(c, d)),
            linext.count_extensions(outcome.with_relation(d, c)),
        )
        if _partition_ok(t0, t1, t2, strict):
            return (c, d), t2
    return None


def check_gpc(poset, mode="adaptive", strict=False):
    """Search for a gold-partition witness; None means the poset fails.

    First pairs are tried in ascending index order and the first full
    witness is returned, so the result is deterministic.  In nonadaptive
    mode a single second pair must be incomparable in, and work for, every
    non-chain outcome.
    """
    if mode not in ("adaptive", "nonadaptive"):
        raise ValueError(f"unknown mode {mode!r}")
    if poset.is_chain():
        raise ChainError("the gold partition conjecture concerns non-chains")
    t0 = linext.count_extensions(poset)
    for a, b in poset.incomparable_pairs():
        outcomes = [
            ((a, b), poset.with_relation(a, b)),
            ((b, a), poset.with_relation(b, a)),
        ]
        t1s = [linext.count_extensions(p) for _, p in outcomes]
        if mode == "adaptive":
            branches = []
            for (result, outcome), t1 in zip(outcomes, t1s):
                found = _branch_second(outcome, t0, t1, strict)
                if found is None:
                    break
                second, t2 = found
                branches.append(GpcBranch(result, t1, second, t2))
            if len(branches) == 2:
                return GpcWitness((a, b), t0, tuple(branches), strict)
        else:
            witness = _nonadaptive_branches(poset, (a, b), t0, outcomes, t1s, strict)
            if witness is not None:
                return witness
    return None


def _nonadaptive_branches(poset, first, t0, outcomes, t1s, strict):
    vacuous = 0 if strict else 1
    open_branches = [
        (i, outcome) for i, (_, outcome) in enumerate(outcomes) if not outcome.is_chain()
    ]
    if not open_branches:
        if all(_partition_ok(t0, t1, vacuous, strict) for t1 in t1s):
            branches = tuple(
                GpcBranch(result, t1, None, vacuous)
                for (result, _), t1 in zip(outcomes, t1s)
            )
            return GpcWitness(first, t0, branches, strict)
        return None
    for c, d in poset.incomparable_pairs():
        if (c, d) == first:
            continue
        seconds = {}
        ok = True
        for i, outcome in open_branches:
            if outcome.is_lt(c, d) or outcome.is_lt(d, c):
                ok = False
                break
            t2 = max(
                linext.count_extensions(outcome.with_relation(c, d)),
                linext.count_extensions(outcome.with_relation(d, c)),
            )
            if not _partition_ok(t0, t1s[i], t2, strict):
                ok = False
                break
            seconds[i] = ((c, d), t2)
        if not ok:
            continue
        branches = []
        for i, ((result, outcome), t1) in enumerate(zip(outcomes, t1s)):
            if i in seconds:
                second, t2 = seconds[i]
            else:
                second, t2 = None, vacuous
                if not _partition_ok(t0, t1, t2, strict):
                    break
            branches.append(GpcBranch(result, t1, second, t2))
        if len(branches) == 2:
            return GpcWitness(first, t0, tuple(branches), strict)
    return None


def verify_gpc_witness(poset, witness):
    """Recount every t-value of a witness from scratch and recheck it.

    A branch with no second pair is accepted when the outcome is a chain
    (the vacuous count), or when some actual second comparison achieves at
    most the recorded t2 -- the form lifted witnesses take on branches
    whose component part is already sorted.
    """
    if linext.count_extensions(poset) != witness.t0:
        return False
    seen = set()
    for branch in witness.branches:
        a, b = branch.result
        seen.add(frozenset(branch.result))
        if poset.is_lt(a, b) or poset.is_lt(b, a):
            return False
        outcome = poset.with_relation(a, b)
        if linext.count_extensions(outcome) != branch.t1:
            return False
        if branch.second is None:
            if outcome.is_chain():
                if branch.t2 != (0 if witness.strict else 1):
                    return False
            elif not _second_achievable(outcome, branch.t2):
                return False
            t2 = branch.t2
        else:
            c, d = branch.second
            if outcome.is_lt(c, d) or outcome.is_lt(d, c):
                return False
            t2 = max(
                linext.count_extensions(outcome.with_relation(c, d)),
                linext.count_extensions(outcome.with_relation(d, c)),
            )
            if t2 != branch.t2:
                return False
        if not _partition_ok(witness.t0, branch.t1, t2, witness.strict):
            return False
    return len(seen) == 1 and frozenset(witness.first) in seen


def _second_achievable(outcome, budget):
    """Does some comparison in ``outcome`` leave at most ``budget`` either way?"""
    for c, d in outcome.incomparable_pairs():
        t2 = max(
            linext.count_extensions(outcome.with_relation(c, d)),
            linext.count_extensions(outcome.with_relation(d, c)),
        )
        if t2 <= budget:
            return True
    return False


def check_one_third(poset, cap=linext.DEFAULT_ENUM_CAP):
    """Balanced pair per the 1/3-2/3 conjecture, or a delta report on failure.

    Returns ((x, y), ratio) on success.  On failure (which would refute the
    conjecture) returns None; use linext.delta for the full report.
    """
    return linext.balanced_pair(poset, cap)


def sort_cost(poset):
    """Minimum worst-case comparisons to sort the poset to a chain.

    Exact minimax over comparison game trees, memoized up to isomorphism.
    """
    if poset.n > SORT_COST_CAP:
        raise SizeCapError(f"sort_cost capped at {SORT_COST_CAP} elements")
    return _sort_cost(poset)


def _sort_cost(poset):
    if poset.is_chain():
        return 0
    key = poset.canonical_key()
    hit = _sort_cost_memo.get(key)
    if hit is not None:
        return hit
    best = None
    for a, b in poset.incomparable_pairs():
        worst = 1 + max(
            _sort_cost(poset.with_relation(a, b)),
            _sort_cost(poset.with_relation(b, a)),
        )
        if best is None or worst < best:
            best = worst
    _sort_cost_memo[key] = best
    return best


def _fib(k):
    """Fibonacci with F(1) = F(2) = 1, extended so that F(-1) = 1, F(0) = 0."""
    if k == -1:
        return 1
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return a


def gold_bound_holds(poset):
    """Exact integer test of e(P) >= phi**C(P).

    Writing phi**C = F(C)*phi + F(C-1), the inequality holds iff
    A = 2e - 2F(C-1) - F(C) is nonnegative and A**2 >= 5*F(C)**2.
    """
    cost = sort_cost(poset)
    e = linext.count_extensions(poset)
    fc, fc1 = _fib(cost), _fib(cost - 1)
    a = 2 * e - 2 * fc1 - fc
    return a >= 0 and a * a >= 5 * fc * fc


def information_lower_bound(poset):
    """ceil(log2 e(P)): comparisons needed by any sorting strategy."""
    e = linext.count_extensions(poset)
    return (e - 1).bit_length()
