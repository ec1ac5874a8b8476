"""Exhaustive enumeration of the set family {F(U') : U' subseteq U} induced
by a stable or weighted instance, with a witness subset recorded for every
member, plus the antimatroid verdict on the result.
"""

from __future__ import annotations

from .antimatroids import AxiomDiagnostic, SetFamily, is_antimatroid
from .stable import StableMatchingInstance, _run_proposals
from .weighted import WeightedInstance, _solve_augmenting, _solve_greedy

DEFAULT_SWEEP_LIMIT = 20


class SweepLimitError(ValueError):
    """A codomain sweep would need more than 2**limit evaluations."""


class InducedFamilyReport:
    """The induced family over V, with one witness subset per member."""

    def __init__(
        self,
        family: SetFamily,
        witnesses: dict[frozenset[str], tuple[str, ...]],
        instance_kind: str,
        instance,
    ):
        self.family = family
        self.witnesses = witnesses
        self.instance_kind = instance_kind
        self.instance = instance

    def __repr__(self):
        return (
            f"InducedFamilyReport(kind={self.instance_kind!r}, "
            f"members={len(self.family)})"
        )


def _subset_order(n: int) -> list[int]:
    # ascending popcount, binary order within equal popcount
    return sorted(range(1 << n), key=int.bit_count)


def _sweep(graph, evaluate, instance_kind, instance, sweep_limit) -> InducedFamilyReport:
    n = len(graph.left)
    if n > sweep_limit:
        raise SweepLimitError(f"sweep limit exceeded: 2**{n} subsets > 2**{sweep_limit}")
    witness_mask: dict[int, int] = {}
    for u_mask in _subset_order(n):
        v_mask = evaluate(u_mask)
        if v_mask not in witness_mask:
            witness_mask[v_mask] = u_mask
    right = graph.right
    witnesses = {}
    for v_mask, u_mask in witness_mask.items():
        member = frozenset(right[i] for i in range(len(right)) if v_mask >> i & 1)
        witnesses[member] = tuple(graph.left[i] for i in range(n) if u_mask >> i & 1)
    family = SetFamily(right, witnesses)
    return InducedFamilyReport(family, witnesses, instance_kind, instance)


def enumerate_codomain_sm(
    inst: StableMatchingInstance, sweep_limit: int = DEFAULT_SWEEP_LIMIT
) -> InducedFamilyReport:
    """The family of matched right-vertex sets over all left subsets (stable)."""
    dense = inst._dense()
    n = len(inst.graph.left)
    n_right = len(inst.graph.right)

    def evaluate(u_mask: int) -> int:
        active = [i for i in range(n) if u_mask >> i & 1]
        match_e = _run_proposals(dense, active, None)
        v_mask = 0
        for v in range(n_right):
            if match_e[v] >= 0:
                v_mask |= 1 << v
        return v_mask

    return _sweep(inst.graph, evaluate, "stable", inst, sweep_limit)


def enumerate_codomain_mm(
    inst: WeightedInstance, sweep_limit: int = DEFAULT_SWEEP_LIMIT
) -> InducedFamilyReport:
    """The family of optimally matched right-vertex sets over all left subsets."""
    dense = inst._dense()
    g = inst.graph
    n = len(g.left)
    n_right = len(g.right)
    solve = _solve_greedy if dense.superincreasing else _solve_augmenting
    pos_of_id = g._pos_of_id
    eR = dense.edge_right

    def evaluate(u_mask: int) -> int:
        allowed = [bool(u_mask >> i & 1) for i in range(n)]
        ids = solve(dense, allowed, n_right, g.edge_ids)
        v_mask = 0
        for eid in ids:
            v_mask |= 1 << eR[pos_of_id[eid]]
        return v_mask

    return _sweep(g, evaluate, "weighted", inst, sweep_limit)


def check_theorem(report: InducedFamilyReport) -> tuple[bool, AxiomDiagnostic]:
    """Run the antimatroid axioms on an induced family."""
    return is_antimatroid(report.family)
