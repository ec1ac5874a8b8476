"""Set families over a ground set, the antimatroid axioms, and the chain
machinery (trace function, per-member chain orders, total feasible order,
rank bijection) that the representation constructions consume.

Members are encoded as bitmasks over the ground order internally and exposed
as frozensets of element ids.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass


class NotAntimatroidError(ValueError):
    """An operation requiring an antimatroid got a family violating the axioms."""

    def __init__(self, diagnostic: "AxiomDiagnostic"):
        super().__init__(f"not an antimatroid: {diagnostic.reason()}")
        self.diagnostic = diagnostic


class SetFamily:
    """A family of subsets of a finite ground set.

    The ground order is preserved from input and fixes the deterministic
    member order used everywhere: ascending cardinality, then lexicographic
    on the sorted ground positions.
    """

    def __init__(self, ground: Iterable[str], members: Iterable[Iterable[str]]):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground element")
        self._pos = {e: i for i, e in enumerate(self.ground)}
        masks = set()
        for member in members:
            mask = 0
            for e in member:
                if e not in self._pos:
                    raise ValueError(f"member element {e!r} not in ground set")
                mask |= 1 << self._pos[e]
            masks.add(mask)
        self._masks = frozenset(masks)
        self._sorted_masks = sorted(masks, key=self._member_key)

    def _member_key(self, mask: int) -> tuple[int, tuple[int, ...]]:
        bits = tuple(i for i in range(len(self.ground)) if mask >> i & 1)
        return (len(bits), bits)

    def _to_set(self, mask: int) -> frozenset[str]:
        return frozenset(self.ground[i] for i in range(len(self.ground)) if mask >> i & 1)

    def _to_mask(self, member: Iterable[str]) -> int:
        mask = 0
        for e in member:
            if e not in self._pos:
                raise ValueError(f"element {e!r} not in ground set")
            mask |= 1 << self._pos[e]
        return mask

    @property
    def members(self) -> tuple[frozenset[str], ...]:
        """All members in canonical order (cardinality, then ground-lex)."""
        return tuple(self._to_set(m) for m in self._sorted_masks)

    def __contains__(self, member: Iterable[str]) -> bool:
        try:
            return self._to_mask(member) in self._masks
        except ValueError:
            return False

    def __len__(self):
        return len(self._masks)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SetFamily):
            return NotImplemented
        return set(other.ground) == set(self.ground) and frozenset(
            other.members
        ) == frozenset(self.members)

    def __hash__(self):
        return hash((frozenset(self.ground), frozenset(self.members)))

    def __repr__(self):
        shown = [sorted(m, key=self._pos.get) for m in self.members]
        return f"SetFamily(ground={list(self.ground)!r}, members={shown!r})"

    def sorted_member(self, member: Iterable[str]) -> list[str]:
        """A member's elements listed in ground order."""
        return sorted(member, key=self._pos.get)


@dataclass(frozen=True)
class AxiomDiagnostic:
    """Outcome of the three antimatroid axiom checks, with witnesses."""

    has_empty: bool
    accessible: bool
    accessibility_witness: frozenset[str] | None
    union_closed: bool
    union_witness: tuple[frozenset[str], frozenset[str]] | None

    @property
    def ok(self) -> bool:
        return self.has_empty and self.accessible and self.union_closed

    def reason(self) -> str:
        if not self.has_empty:
            return "the empty set is not a member"
        if not self.accessible:
            return f"accessibility fails at {sorted(self.accessibility_witness)!r}"
        if not self.union_closed:
            x, y = self.union_witness
            return f"union of {sorted(x)!r} and {sorted(y)!r} is not a member"
        return "all axioms hold"


def is_accessible(family: SetFamily) -> tuple[bool, frozenset[str] | None]:
    """Every nonempty member must lose some element and stay a member.

    Returns (True, None) or (False, violating member).
    """
    masks = family._masks
    for mask in family._sorted_masks:
        if mask == 0:
            continue
        bits = mask
        ok = False
        while bits:
            low = bits & -bits
            if mask ^ low in masks:
                ok = True
                break
            bits ^= low
        if not ok:
            return False, family._to_set(mask)
    return True, None


def is_union_closed(
    family: SetFamily,
) -> tuple[bool, tuple[frozenset[str], frozenset[str]] | None]:
    """Pairwise unions must stay in the family.

    Returns (True, None) or (False, (x, y)) for a witness pair.
    """
    masks = family._sorted_masks
    memberset = family._masks
    for i, x in enumerate(masks):
        for y in masks[i + 1 :]:
            if x | y not in memberset:
                return False, (family._to_set(x), family._to_set(y))
    return True, None


def is_antimatroid(family: SetFamily) -> tuple[bool, AxiomDiagnostic]:
    """Check empty-set membership, accessibility, and union-closedness."""
    has_empty = 0 in family._masks
    acc, acc_witness = is_accessible(family)
    uc, uc_witness = is_union_closed(family)
    diag = AxiomDiagnostic(has_empty, acc, acc_witness, uc, uc_witness)
    return diag.ok, diag


def complement_family(family: SetFamily) -> SetFamily:
    """The complement of every member, over the same ground set."""
    full = (1 << len(family.ground)) - 1
    return SetFamily(
        family.ground, [family._to_set(full ^ m) for m in family._sorted_masks]
    )


@dataclass(frozen=True)
class ChainDecoration:
    """Accessibility-derived structure on an antimatroid's nonempty members.

    trace maps each nonempty member X to an element whose removal stays in
    the family; chain_order lists X's elements so that every prefix is a
    member; feasible_order is a total order on nonempty members in which
    proper subsets come first; rank is the bijection onto {1..n} that is
    decreasing along feasible_order.
    """

    trace: dict[frozenset[str], str]
    chain_order: dict[frozenset[str], tuple[str, ...]]
    feasible_order: tuple[frozenset[str], ...]
    rank: dict[frozenset[str], int]


def build_decoration(family: SetFamily, tie_seed: int | None = None) -> ChainDecoration:
    """Pick a trace function and derive chains, feasible order, and ranks.

    With tie_seed None, the removable element chosen is the smallest in
    ground order; otherwise a seeded choice, still deterministic per seed.
    """
    ok, diag = is_antimatroid(family)
    if not ok:
        raise NotAntimatroidError(diag)
    rng = random.Random(tie_seed) if tie_seed is not None else None

    masks = family._masks
    trace_mask: dict[int, int] = {}
    for mask in family._sorted_masks:
        if mask == 0:
            continue
        candidates = [
            i for i in range(len(family.ground)) if mask >> i & 1 and (mask ^ (1 << i)) in masks
        ]
        # accessibility guarantees candidates is nonempty
        pick = rng.choice(candidates) if rng is not None else candidates[0]
        trace_mask[mask] = pick

    trace: dict[frozenset[str], str] = {}
    chain_order: dict[frozenset[str], tuple[str, ...]] = {}
    for mask in family._sorted_masks:
        if mask == 0:
            continue
        member = family._to_set(mask)
        trace[member] = family.ground[trace_mask[mask]]
        # peel the trace element repeatedly; the chain is the reversed peeling
        seq: list[str] = []
        cur = mask
        while cur:
            i = trace_mask[cur]
            seq.append(family.ground[i])
            cur ^= 1 << i
            if cur and cur not in masks:
                raise AssertionError("trace peeled out of the family")
        chain_order[member] = tuple(reversed(seq))

    nonempty = [m for m in family._sorted_masks if m]
    feasible_order = tuple(family._to_set(m) for m in nonempty)
    n = len(feasible_order)
    rank = {member: n - i for i, member in enumerate(feasible_order)}
    return ChainDecoration(trace, chain_order, feasible_order, rank)


def validate_decoration(family: SetFamily, deco: ChainDecoration) -> None:
    """Raise ValueError unless deco satisfies all decoration invariants on family."""
    nonempty = {m for m in family.members if m}
    for name, keys in (
        ("trace", set(deco.trace)),
        ("chain_order", set(deco.chain_order)),
        ("rank", set(deco.rank)),
        ("feasible_order", set(deco.feasible_order)),
    ):
        if keys != nonempty:
            raise ValueError(f"decoration {name} does not cover the nonempty members")
    if len(deco.feasible_order) != len(nonempty):
        raise ValueError("feasible_order repeats a member")

    for member, e in deco.trace.items():
        if e not in member or (member - {e}) not in family:
            raise ValueError(f"trace element {e!r} invalid for {sorted(member)!r}")
    for member, chain in deco.chain_order.items():
        if frozenset(chain) != member or len(chain) != len(member):
            raise ValueError(f"chain of {sorted(member)!r} is not an ordering of it")
        prefix: set[str] = set()
        for e in chain:
            prefix.add(e)
            if frozenset(prefix) not in family:
                raise ValueError(f"chain prefix {sorted(prefix)!r} not in family")
            if deco.trace[frozenset(prefix)] != e:
                raise ValueError(f"chain of {sorted(member)!r} disagrees with trace")

    pos = {member: i for i, member in enumerate(deco.feasible_order)}
    for x in deco.feasible_order:
        for y in deco.feasible_order:
            if x < y and pos[x] > pos[y]:
                raise ValueError("feasible_order places a superset before a subset")
    n = len(deco.feasible_order)
    if sorted(deco.rank.values()) != list(range(1, n + 1)):
        raise ValueError("rank is not a bijection onto 1..n")
    for x in deco.feasible_order:
        for y in deco.feasible_order:
            if (deco.rank[x] > deco.rank[y]) != (pos[x] < pos[y]):
                raise ValueError("rank disagrees with feasible_order")


def random_antimatroid(ground_size: int, density_seed: int) -> SetFamily:
    """A random antimatroid grown from chains and closed under union.

    Ground sizes up to 6 are supported; the result always passes
    is_antimatroid (re-drawn internally if a draw ever failed).
    """
    if not 0 <= ground_size <= 6:
        raise ValueError("ground_size must be between 0 and 6")
    ground = tuple("abcdef"[:ground_size])
    rng = random.Random(density_seed)
    while True:
        masks = {0}
        if ground_size:
            steps = rng.randint(1, 2 * ground_size)
            for _ in range(steps):
                base = rng.choice(sorted(masks))
                free = [i for i in range(ground_size) if not base >> i & 1]
                if not free:
                    continue
                masks.add(base | 1 << rng.choice(free))
        # close under union
        while True:
            extra = {x | y for x in masks for y in masks} - masks
            if not extra:
                break
            masks |= extra
        fam = SetFamily(
            ground,
            [[ground[i] for i in range(ground_size) if m >> i & 1] for m in masks],
        )
        if is_antimatroid(fam)[0]:
            return fam


def enumerate_antimatroids(ground: Sequence[str]) -> list[SetFamily]:
    """All antimatroids over the given ground set, by filtering every family.

    Scans all 2**(2**n) - ish candidate families, so n must stay below 5.
    """
    n = len(ground)
    if n > 4:
        raise ValueError("exhaustive enumeration supported only for ground size <= 4")
    num_sets = 1 << n
    out: list[SetFamily] = []
    # bit s of fam_code says whether subset-mask s is a member; force bit 0 (the empty set)
    for fam_code in range(1, 1 << num_sets, 2):
        members = [s for s in range(num_sets) if fam_code >> s & 1]
        memberset = set(members)
        ok = True
        for i, x in enumerate(members):
            if not ok:
                break
            for y in members[i + 1 :]:
                if x | y not in memberset:
                    ok = False
                    break
        if ok:
            for x in members:
                if x == 0:
                    continue
                if not any(x ^ (1 << i) in memberset for i in range(n) if x >> i & 1):
                    ok = False
                    break
        if ok:
            out.append(
                SetFamily(
                    ground,
                    [[ground[i] for i in range(n) if s >> i & 1] for s in members],
                )
            )
    return out
