"""Why e(Q) divides e(P o_i Q): the class table, worked in full.

Replace the minimal point w of the N-shaped poset by a small component
(an isolated point r over a chain t < u) and watch the 42 linear
extensions of the sum organize themselves into 3 equal columns of 14 --
one column per linear extension of the component.
"""

from posetlex import Poset, count_extensions, locality_table, verify_divisibility

base = Poset.from_relations(4, [(0, 2), (1, 2), (1, 3)])  # w<y, x<y, x<z
component = Poset.from_relations(3, [(1, 2)])  # r beside t<u

names = ["r", "t", "u", "x", "y", "z"]
table = locality_table(base, 0, component)

print(f"e(component) = {count_extensions(component)}")
print(f"e(sum)       = {table.total}")
print(f"classes      = {len(table.columns)} columns x {table.k} rows\n")

for column in table.columns:
    order = " < ".join("rtu"[q] for q in column)
    print(f"column {order}:")
    for ext in table.classes[column]:
        row = " ".join(f"{names[e]}={ext.labels[e]}" for e in range(6))
        print(f"  {row}")
    print()

divisible, cofactor = verify_divisibility(
    base, [component] + [Poset.antichain(1)] * 3
)
print(f"e(component) | e(sum): {divisible} (cofactor {cofactor})")
