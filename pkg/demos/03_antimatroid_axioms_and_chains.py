"""Axiom checking, complementation, and the chain structure of set families.

A family is an antimatroid when it contains the empty set, every nonempty
member can shed some element and stay a member (accessibility), and unions
of members are members.  On such a family one can pick a trace element per
member and read off chains, a total order, and ranks; those drive the
representation constructions in demo 04.
"""

from matchroid import (
    SetFamily,
    build_decoration,
    complement_family,
    is_accessible,
    is_antimatroid,
    is_union_closed,
    random_antimatroid,
)

good = SetFamily(["v1", "v2", "v3"], [[], ["v1"], ["v2"], ["v1", "v2"], ["v1", "v2", "v3"]])
bad = SetFamily(["v1", "v2"], [[], ["v1"], ["v2"]])

print("## axiom checks")
for name, fam in (("good", good), ("bad", bad)):
    ok, diag = is_antimatroid(fam)
    print(f"  {name}: accessible={is_accessible(fam)[0]} "
          f"union_closed={is_union_closed(fam)[0]} antimatroid={ok}")
    if not ok:
        print(f"    reason: {diag.reason()}")

print("\n## complementation (intersection-closed dual)")
comp = complement_family(good)
print(f"  members of the complement: {[sorted(m) for m in comp.members]}")
print(f"  double complement restores the family: {complement_family(comp) == good}")

print("\n## chains, feasible order, ranks")
deco = build_decoration(good)
for member in deco.feasible_order:
    chain = " > ".join(deco.chain_order[member])
    print(f"  {sorted(member)}: trace={deco.trace[member]} chain=({chain}) "
          f"rank={deco.rank[member]}")

print("\n## a random antimatroid, grown from chains and closed under union")
fam = random_antimatroid(4, density_seed=7)
print(f"  ground {list(fam.ground)}, {len(fam)} members:")
for member in fam.members:
    print(f"    {sorted(member)}")
print(f"  verdict: {is_antimatroid(fam)[0]}")
