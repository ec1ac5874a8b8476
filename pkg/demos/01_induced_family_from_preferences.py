"""Walk through the preference-side induced family on a small instance.

Three proposers u1..u3 and three reviewers v1..v3 rank each other; for any
subset of proposers the proposal algorithm produces one stable matching, and
collecting the matched reviewer sets over all proposer subsets yields a set
family.  The family always satisfies the antimatroid axioms.
"""

from pathlib import Path

from matchroid import (
    check_theorem,
    deferred_acceptance,
    enumerate_codomain_sm,
    induced_map_sm,
    is_stable,
)
from matchroid.io import load_stable_instance

inst = load_stable_instance(Path(__file__).parent / "data" / "prefs_3x3.json")
U = inst.graph.left

print("## the instance")
for r in inst.graph.left + inst.graph.right:
    print(f"  {r}: {' > '.join(inst.prefs.ranking(r)) or '(no neighbors)'}")

print("\n## one run of the proposal algorithm")
m = deferred_acceptance(inst, U)
print(f"  matching for all of U: {sorted(m.pairs())}")
print(f"  stable: {is_stable(inst, m)}")

print("\n## the induced map on a few subsets")
for subset in ([], ["u1"], ["u3"], ["u1", "u2"], list(U)):
    image = induced_map_sm(inst, subset)
    print(f"  F({sorted(subset)}) = {sorted(image)}")

print("\n## the whole codomain")
report = enumerate_codomain_sm(inst)
for member in report.family.members:
    witness = report.witnesses[member]
    print(f"  {sorted(member)}  (first witness subset: {list(witness)})")

ok, diag = check_theorem(report)
print(f"\nantimatroid verdict: {ok} ({diag.reason()})")
