"""Exact sorting cost against the golden-ratio and information bounds.

C(P) is the minimum worst-case number of comparisons needed to sort P,
computed by exhaustive game-tree search.  For every small poset it obeys
ceil(log2 e) <= C(P) <= log_phi e, the upper bound being what the gold
partition inequality buys.  The log_phi test is exact integer arithmetic:
phi^C = F(C) phi + F(C-1) reduces it to a comparison of squares.
"""

from posetlex import Poset, count_extensions, gold_bound_holds, sort_cost
from posetlex.conjectures import information_lower_bound

cases = [
    ("chain(5)", Poset.chain(5)),
    ("antichain(2)", Poset.antichain(2)),
    ("point + 2-chain", Poset.from_relations(3, [(1, 2)])),
    ("antichain(3)", Poset.antichain(3)),
    ("N shape", Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)])),
    ("antichain(5)", Poset.antichain(5)),
]

print(f"{'poset':<16} {'e(P)':>6} {'ceil(lg e)':>10} {'C(P)':>5} {'phi bound':>9}")
for name, p in cases:
    e = count_extensions(p)
    lo = information_lower_bound(p)
    c = sort_cost(p)
    print(f"{name:<16} {e:>6} {lo:>10} {c:>5} {str(gold_bound_holds(p)):>9}")
