"""Balance values, and how substituting a chain shifts them.

The two-dimensional order of (1,5,3,2,4) has balance value delta = 1/2.
Substituting a 2-chain at its third point produces the 6-element order of
(1,6,3,4,2,5), whose balance value drops to 7/15 -- still above the 1/3
floor, but strictly worse.  The closed-form gap formula predicts every
order probability of the substituted poset without ever building it.
"""

from posetlex import (
    Poset,
    chain_substitution_probability,
    compose_at,
    delta,
    gap_profile,
    prob,
)

small = Poset.from_permutation([1, 5, 3, 2, 4])
large = Poset.from_permutation([1, 6, 3, 4, 2, 5])

for name, p in (("(1,5,3,2,4)", small), ("(1,6,3,4,2,5)", large)):
    value, pair = delta(p)
    print(f"delta of {name} = {value} at pair {pair}")

profile = gap_profile(small, 2)
print(f"\ngap classes around point 2 of the small poset: {profile.classes}")

for m in (1, 2, 3):
    grown = compose_at(small, 2, Poset.chain(m))
    predicted = chain_substitution_probability(small, 2, m, 1, 3)
    actual = prob(grown.poset, grown.embed[1][0], grown.embed[3][0])
    print(f"m={m}: predicted P(1 before 3) = {predicted}, recounted = {actual}")
