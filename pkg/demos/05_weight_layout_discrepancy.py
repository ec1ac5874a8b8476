"""Why the weighted representation orders exponents the way it does.

Within each left vertex's block of power-of-two weights there are two ways
to lay out the exponents along its chain: give the most-preferred element
the largest weight ("corrected", the default) or the smallest ("literal").
On the two-member chain family the literal layout already fails: the top
member alone picks its least-preferred element, which is not a member.
"""

from matchroid import SetFamily, induced_map_mm, represent_weighted, verify_roundtrip

fam = SetFamily(["a", "b"], [[], ["a"], ["a", "b"]])
print(f"family: {[sorted(m) for m in fam.members]}")

for formula in ("corrected", "literal"):
    bundle = represent_weighted(fam, formula=formula)
    inst = bundle.instance
    print(f"\n## formula = {formula}")
    for pos, (u, v) in enumerate(inst.graph.edges):
        w = inst.weights.values[pos]
        print(f"  w(({u}, {v})) = 2^{w.bit_length() - 1}")
    top = bundle.left_labels[frozenset({"a", "b"})]
    image = induced_map_mm(inst, [top])
    member = "a member" if image in fam else "NOT a member"
    print(f"  F({{{top}}}) = {sorted(image)}  ({member} of the family)")
    equal, _ = verify_roundtrip(fam, "weighted", formula=formula)
    print(f"  full roundtrip: {equal}")
