"""Gold-partition witnesses, and lifting them through a decomposition.

A witness is a first comparison such that for either result, a second
comparison keeps the remaining-extension counts inside the partition
inequality t0 >= t1 + t2 -- the integer shadow of phi^2 = phi + 1.  On a
19-element poset the direct search is expensive, but the poset contains
an order-autonomous 3-element set; a witness found on that small factor
lifts to the whole poset with every count multiplied by the same k.
"""

import json

from posetlex import Poset, check_gpc, count_extensions, verify_gpc_witness
from posetlex.decompose import decompose, gpc_via_decomposition

small = Poset.from_relations(3, [(1, 2)])  # a point beside a 2-chain
w = check_gpc(small)
print("witness for the 3-element poset:")
print(json.dumps(w.to_json_dict(), indent=2))
print(f"verified: {verify_gpc_witness(small, w)}\n")

perm = [1, 15, 13, 17, 18, 16, 12, 10, 14, 8, 11, 9, 6, 7, 0, 5, 2, 3, 4]
wide = Poset.from_permutation(perm)
print(f"19-element poset: e = {count_extensions(wide)}")

split = decompose(wide)
print(f"autonomous set {split.members}, factor relations {split.factor.relation_pairs()}")

lifted = gpc_via_decomposition(wide)
k = count_extensions(wide) // count_extensions(split.factor)
print(f"lifted witness (every count is k = {k} times the factor's):")
print(json.dumps(lifted.to_json_dict(), indent=2))
print(f"verified on the full poset: {verify_gpc_witness(wide, lifted)}")
