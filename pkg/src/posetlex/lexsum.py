"""Lexicographic sums and what they preserve.

Builds P(Q_1,...,Q_n) by replacing each point of a base poset with a
component poset, inheriting the order between components from the base.
On top of the construction sit the facts this package mechanically
verifies: locality of component labels, the equal-class table whose shape
proves e(Q) | e(P o_i Q), exact lifting of gold-partition witnesses with
t' = k*t, preservation of order probabilities inside a component, and the
closed-form probability after substituting a chain at one point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linext
from .errors import (
    ArityMismatchError,
    CapExceededError,
    ComponentError,
    InvalidWitnessError,
    PosetError,
    RemarkViolationError,
)
from .conjectures import GpcBranch, GpcWitness, verify_gpc_witness
from .poset import Poset


@dataclass(frozen=True)
class LexSumSpec:
    """A lexicographic sum together with its embedding bookkeeping.

    ``embed[i][q]`` is the sum element representing local element q of
    component i; components are laid out consecutively in base order.
    """

    base: Poset
    components: tuple
    embed: tuple
    poset: Poset
    trivial: bool

    def component_of(self, element):
        for i, block in enumerate(self.embed):
            if element in block:
                return i
        raise ComponentError(f"element {element} outside the sum")


def lex_sum(base, components):
    """The lexicographic sum of ``base`` with one component per point."""
    components = tuple(components)
    if len(components) != base.n:
        raise ArityMismatchError(
            f"{base.n} base points but {len(components)} components"
        )
    offsets = []
    total = 0
    for q in components:
        offsets.append(total)
        total += q.n
    embed = tuple(
        tuple(range(offsets[i], offsets[i] + components[i].n))
        for i in range(base.n)
    )
    rows = [0] * total
    for i, q in enumerate(components):
        off = offsets[i]
        for a in range(q.n):
            rows[off + a] |= q.lt[a] << off
        for j in range(base.n):
            if base.is_lt(i, j):
                block = ((1 << components[j].n) - 1) << offsets[j]
                for a in range(q.n):
                    rows[off + a] |= block
    poset = Poset(total, rows, _trusted=True)
    trivial = base.n == 1 or all(q.n == 1 for q in components)
    return LexSumSpec(base, components, embed, poset, trivial)


def compose_at(base, i, component):
    """Substitute ``component`` at point i only (all other points stay)."""
    if not 0 <= i < base.n:
        raise IndexError(f"point {i} outside the base poset")
    one = Poset.antichain(1)
    return lex_sum(base, [component if j == i else one for j in range(base.n)])


def restrict_to_component(spec, extension, i):
    """The linear order the extension induces on component i.

    Returns the local elements of Q_i sorted by label.  Also checks
    locality: every component above (below) i in the base must be labeled
    entirely above (below) Q_i.  A violation means the extension does not
    belong to the sum and is reported as RemarkViolationError.
    """
    block = spec.embed[i]
    labels = extension.labels
    lo = min(labels[e] for e in block)
    hi = max(labels[e] for e in block)
    for j in range(spec.base.n):
        if spec.base.is_lt(i, j) and any(labels[e] <= hi for e in spec.embed[j]):
            raise RemarkViolationError(f"component {j} not above component {i}")
        if spec.base.is_lt(j, i) and any(labels[e] >= lo for e in spec.embed[j]):
            raise RemarkViolationError(f"component {j} not below component {i}")
    local = sorted(range(len(block)), key=lambda q: labels[block[q]])
    return tuple(local)


def _repattern(spec, extension, i, pattern):
    """Reassign the labels Q_i occupies so its local order becomes ``pattern``."""
    block = spec.embed[i]
    slots = sorted(extension.labels[e] for e in block)
    labels = list(extension.labels)
    for rank, q in enumerate(pattern):
        labels[block[q]] = slots[rank]
    return linext.LinearExtension(tuple(labels))


@dataclass(frozen=True)
class LocalityTable:
    """L(P o_i Q) organized as equal-size classes, one per order of Q."""

    spec: LexSumSpec
    columns: tuple  # local orders of Q, in enumeration order
    classes: dict  # column -> tuple of extensions of the sum
    k: int  # common class size
    total: int  # e of the sum


def locality_table(base, i, component, cap=linext.DEFAULT_ENUM_CAP):
    """Materialize the class table of the sum and verify its shape.

    Checks that the classes keyed by the induced order on Q partition
    L(sum) into equally sized rows with k * e(Q) = e(sum), and that the
    row/column reconstruction is a bijection.
    """
    spec = compose_at(base, i, component)
    columns = tuple(
        tuple(g.order) for g in linext.enumerate_extensions(component, cap)
    )
    classes = {g: [] for g in columns}
    extensions = linext.enumerate_extensions(spec.poset, cap)
    for f in extensions:
        classes[restrict_to_component(spec, f, i)].append(f)
    sizes = {g: len(fs) for g, fs in classes.items()}
    if len(set(sizes.values())) != 1:
        raise PosetError(f"unequal class sizes {sizes} falsify the class table")
    k = sizes[columns[0]]
    total = len(extensions)
    if k * len(columns) != total:
        raise PosetError("class sizes do not tile L(sum)")
    reference = columns[0]
    rows = set(classes[reference])
    for f in extensions:
        row = _repattern(spec, f, i, reference)
        if row not in rows:
            raise PosetError("reconstruction left the reference class")
        if _repattern(spec, row, i, restrict_to_component(spec, f, i)) != f:
            raise PosetError("row/column reconstruction failed")
    return LocalityTable(
        spec, columns, {g: tuple(fs) for g, fs in classes.items()}, k, total
    )


def verify_divisibility(base, components):
    """Check prod e(Q_i) | e(P(Q_1,...,Q_n)); returns (divides, cofactor).

    A False here would falsify the class-table argument and deserves loud
    treatment by the caller.
    """
    spec = lex_sum(base, components)
    product = math.prod(linext.count_extensions(q) for q in spec.components)
    total = linext.count_extensions(spec.poset)
    return total % product == 0, total // product


def lift_witness(sum_poset, mapping, component, witness):
    """Lift a gold-partition witness of a component into the enclosing sum.

    ``mapping[q]`` names the sum element carrying local element q.  The
    witness is first re-verified on the component, then every t-value is
    independently recounted on the sum and checked to be exactly k times
    the component value, k = e(sum) / e(component).
    """
    if not verify_gpc_witness(component, witness):
        raise InvalidWitnessError("witness fails re-verification on the component")
    e_q = linext.count_extensions(component)
    e_sum = linext.count_extensions(sum_poset)
    if e_sum % e_q:
        raise PosetError("e(component) does not divide e(sum)")
    k = e_sum // e_q
    if e_sum != k * witness.t0:
        raise PosetError("lifted t0 is not k * t0")
    first = (mapping[witness.first[0]], mapping[witness.first[1]])
    branches = []
    for branch in witness.branches:
        a, b = (mapping[branch.result[0]], mapping[branch.result[1]])
        outcome = sum_poset.with_relation(a, b)
        t1 = linext.count_extensions(outcome)
        if t1 != k * branch.t1:
            raise PosetError("lifted t1 is not k * t1")
        if branch.second is None:
            second, t2 = None, k * branch.t2
        else:
            second = (mapping[branch.second[0]], mapping[branch.second[1]])
            t2 = max(
                linext.count_extensions(outcome.with_relation(*second)),
                linext.count_extensions(outcome.with_relation(second[1], second[0])),
            )
            if t2 != k * branch.t2:
                raise PosetError("lifted t2 is not k * t2")
        branches.append(GpcBranch((a, b), t1, second, t2))
    lifted = GpcWitness(first, e_sum, tuple(branches), witness.strict)
    if not lifted.holds():
        raise PosetError("lifted witness violates the partition inequality")
    return lifted


def lift_gpc_witness(base, i, component, witness):
    """Witness for P o_i Q obtained from a witness for Q (exact k-multiples)."""
    spec = compose_at(base, i, component)
    return lift_witness(spec.poset, spec.embed[i], component, witness)


def prob_preservation(spec, i, x, y):
    """Order probability of a component pair, inside Q_i and inside the sum.

    x and y are sum elements that must both lie in component i.  The two
    exact probabilities are returned and checked equal.
    """
    block = spec.embed[i]
    if x not in block or y not in block:
        raise ComponentError(f"({x},{y}) does not lie inside component {i}")
    lx, ly = block.index(x), block.index(y)
    in_component = linext.prob(spec.components[i], lx, ly)
    in_sum = linext.prob(spec.poset, x, y)
    if in_component != in_sum:
        raise PosetError(
            f"probability not preserved: {in_component} vs {in_sum}"
        )
    return in_component, in_sum


def multiset_coefficient(y, x):
    """Number of multisets of size x from y symbols: C(y+x-1, x)."""
    return math.comb(y + x - 1, x)


@dataclass(frozen=True)
class GapProfile:
    """L(P) partitioned by the reinsertion gap around a distinguished point.

    Each class collects the extensions that agree away from the point;
    ``classes`` maps the reduced order (elements minus the point, by label)
    to its gap count k, so the class holds exactly k + 1 extensions.
    """

    poset: Poset
    point: int
    classes: dict

    def total(self):
        return sum(k + 1 for k in self.classes.values())

    def substituted_count(self, m):
        """Predicted e(P o_point <m>) from the class sizes alone."""
        return sum(multiset_coefficient(k + 1, m) for k in self.classes.values())


def gap_profile(poset, point, cap=linext.DEFAULT_ENUM_CAP):
    """Classify L(P) by the free gap of ``point`` between its neighbors.

    For an extension f, take c = max label of a strict predecessor of the
    point (0 when none) and b = min label of a strict successor (n+1 when
    none); k counts the incomparable elements labeled strictly between c
    and b.  Extensions sharing the reduced order form one class of k + 1.
    """
    n = poset.n
    below = poset.below_mask(point)
    above = poset.above_mask(point)
    incomp = poset.incomparable_mask(point)
    classes = {}
    total = 0
    for f in linext.enumerate_extensions(poset, cap):
        labels = f.labels
        c = max((labels[s] for s in _bits(below)), default=0)
        b = min((labels[r] for r in _bits(above)), default=n + 1)
        k = sum(1 for t in _bits(incomp) if c < labels[t] < b)
        reduced = tuple(
            e for e in sorted(range(n), key=labels.__getitem__) if e != point
        )
        total += 1
        seen = classes.get(reduced)
        if seen is None:
            classes[reduced] = (k, 1)
        elif seen[0] != k:
            raise PosetError("class members disagree on the gap size")
        else:
            classes[reduced] = (k, seen[1] + 1)
    for reduced, (k, size) in classes.items():
        if size != k + 1:
            raise PosetError(
                f"class of size {size} does not match gap {k} + 1"
            )
    profile = GapProfile(poset, point, {r: k for r, (k, _) in classes.items()})
    if profile.total() != total:
        raise PosetError("gap classes do not partition L(P)")
    return profile


def chain_substitution_probability(poset, point, m, x, y, cap=linext.DEFAULT_ENUM_CAP):
    """Exact P(x < y) in P o_point <m>, from the gap profile of P alone.

    Sums multiset coefficients over the classes split by the orientation
    of (x, y): sum c_k * C(k+m, m) / sum (c_k + d_k) * C(k+m, m).
    """
    if x == point or y == point or x == y:
        raise ValueError("monitored pair must avoid the substituted point")
    profile = gap_profile(poset, point, cap)
    num = 0
    den = 0
    for reduced, k in profile.classes.items():
        weight = multiset_coefficient(k + 1, m)
        den += weight
        if reduced.index(x) < reduced.index(y):
            num += weight
    return Fraction(num, den)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low
