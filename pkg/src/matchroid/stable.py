"""Stable matching instances: blocking pairs, the proposal algorithm, and the
induced map from left-vertex subsets to matched right-vertex sets.

The proposal algorithm repeatedly lets an unmatched left vertex propose to
its best remaining neighbor; the neighbor keeps the proposer it prefers and
rejects the other.  Its output is independent of the order in which
proposers are picked, which the test suite exercises with seeded orders.
"""

from __future__ import annotations

import random
from collections import deque
from collections.abc import Iterable, Mapping, Sequence

from .graphs import (
    DEFAULT_ORACLE_LIMIT,
    BipartiteGraph,
    Matching,
    UnknownVertexError,
    _as_matching,
    _check_left_subset,
    enumerate_matchings,
)


class PreferenceProfile:
    """A strict ranking (best first) of each vertex's neighbors."""

    def __init__(self, rankings: Mapping[str, Sequence[str]]):
        self._rankings = {r: tuple(order) for r, order in rankings.items()}

    def ranking(self, r: str) -> tuple[str, ...]:
        return self._rankings[r]

    def vertices(self) -> tuple[str, ...]:
        return tuple(self._rankings)

    def as_dict(self) -> dict[str, tuple[str, ...]]:
        return dict(self._rankings)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PreferenceProfile):
            return NotImplemented
        return self._rankings == other._rankings

    def __repr__(self):
        return f"PreferenceProfile({self._rankings!r})"


class StableMatchingInstance:
    """A bipartite graph plus a preference profile covering every vertex.

    Rankings must be exact permutations of each vertex's neighbor set;
    anything else is rejected at construction so data errors surface early.
    A vertex with no neighbors may omit its (empty) ranking.
    """

    def __init__(self, graph: BipartiteGraph, prefs: Mapping[str, Sequence[str]] | PreferenceProfile):
        self.graph = graph
        raw = prefs.as_dict() if isinstance(prefs, PreferenceProfile) else dict(prefs)
        for r in raw:
            if not graph.has_vertex(r):
                raise UnknownVertexError(f"ranking given for unknown vertex {r!r}")
        normalized: dict[str, tuple[str, ...]] = {}
        for r in graph.left + graph.right:
            neighbors = graph.neighbors(r)
            if r not in raw:
                if neighbors:
                    raise ValueError(f"missing ranking for vertex {r!r}")
                normalized[r] = ()
                continue
            order = tuple(raw[r])
            if len(set(order)) != len(order) or set(order) != set(neighbors):
                raise ValueError(
                    f"ranking for {r!r} is not a permutation of its neighbors"
                )
            normalized[r] = order
        self.prefs = PreferenceProfile(normalized)
        self._dense_cache = None

    def __eq__(self, other) -> bool:
        if not isinstance(other, StableMatchingInstance):
            return NotImplemented
        return self.graph == other.graph and self.prefs == other.prefs

    def __repr__(self):
        return f"StableMatchingInstance({self.graph!r})"

    def _dense(self):
        """Integer-indexed preference structures for the proposal loop."""
        if self._dense_cache is None:
            g = self.graph
            lpos, rpos = g._left_pos, g._right_pos
            eid_of = {}
            for pos, (u, v) in enumerate(g.edges):
                eid_of[lpos[u], rpos[v]] = g.edge_ids[pos]
            prefs_right: list[list[int]] = []
            prefs_edge: list[list[int]] = []
            for u in g.left:
                ud = lpos[u]
                vds = [rpos[v] for v in self.prefs.ranking(u)]
                prefs_right.append(vds)
                prefs_edge.append([eid_of[ud, vd] for vd in vds])
            sentinel = len(g.left) + 1
            rank = [[sentinel] * len(g.left) for _ in g.right]
            for v in g.right:
                row = rank[rpos[v]]
                for pos, u in enumerate(self.prefs.ranking(v)):
                    row[lpos[u]] = pos
            self._dense_cache = (prefs_right, prefs_edge, rank, len(g.right))
        return self._dense_cache


def restrict_instance(inst: StableMatchingInstance, x: Iterable[str]) -> StableMatchingInstance:
    """Restrict graph and preferences to the vertex set x, preserving order."""
    keep = set(x)
    sub = inst.graph.restrict(keep)
    prefs = {
        r: [t for t in inst.prefs.ranking(r) if t in keep]
        for r in sub.left + sub.right
    }
    return StableMatchingInstance(sub, prefs)


def _resolve_edge(graph: BipartiteGraph, e) -> tuple[str, str]:
    if isinstance(e, int):
        return graph.endpoints(e)
    u, v = tuple(e)
    pair = (u, v)
    if pair not in set(graph.edges):
        raise ValueError(f"not an edge: {pair!r}")
    return pair


def is_blocking_pair(inst: StableMatchingInstance, m, e) -> bool:
    """Does edge e block matching m?

    True iff u is unmatched or prefers v to its partner, and v is unmatched
    or prefers u to its partner.
    """
    u, v = _resolve_edge(inst.graph, e)
    mm = _as_matching(inst.graph, m)
    pu = mm.partner(u)
    pv = mm.partner(v)
    ru = inst.prefs.ranking(u)
    rv = inst.prefs.ranking(v)
    u_wants = pu is None or ru.index(v) < ru.index(pu)
    v_wants = pv is None or rv.index(u) < rv.index(pv)
    return u_wants and v_wants


def is_stable(inst: StableMatchingInstance, m) -> bool:
    """True iff no edge of the instance blocks m."""
    mm = _as_matching(inst.graph, m)
    return not any(is_blocking_pair(inst, mm, e) for e in inst.graph.edges)


def _run_proposals(dense, active: list[int], rng: random.Random | None) -> list[int]:
    """Run the proposal loop for the given left vertices (dense indices).

    Returns, per right dense index, the edge id of its final match or -1.
    ptr[u] always points at u's best neighbor that has not rejected it; a
    matched u sits exactly at its partner's position.
    """
    prefs_right, prefs_edge, rank, n_right = dense
    ptr = [0] * len(prefs_right)
    match_u = [-1] * n_right
    match_e = [-1] * n_right
    if rng is None:
        dq = deque(active)
        while dq:
            u = dq[0]
            pr = prefs_right[u]
            while True:
                k = ptr[u]
                if k == len(pr):
                    dq.popleft()
                    break
                v = pr[k]
                cur = match_u[v]
                if cur < 0:
                    match_u[v] = u
                    match_e[v] = prefs_edge[u][k]
                    dq.popleft()
                    break
                row = rank[v]
                if row[u] < row[cur]:
                    match_u[v] = u
                    match_e[v] = prefs_edge[u][k]
                    ptr[cur] += 1
                    dq.popleft()
                    dq.append(cur)
                    break
                ptr[u] += 1
    else:
        # one proposal per arbitrary pick, to exercise order independence
        pool = list(active)
        while pool:
            i = rng.randrange(len(pool))
            u = pool[i]
            k = ptr[u]
            pr = prefs_right[u]
            if k == len(pr):
                pool[i] = pool[-1]
                pool.pop()
                continue
            v = pr[k]
            cur = match_u[v]
            if cur < 0:
                match_u[v] = u
                match_e[v] = prefs_edge[u][k]
                pool[i] = pool[-1]
                pool.pop()
            elif rank[v][u] < rank[v][cur]:
                match_u[v] = u
                match_e[v] = prefs_edge[u][k]
                ptr[cur] += 1
                pool[i] = pool[-1]
                pool.pop()
                pool.append(cur)
            else:
                ptr[u] += 1
    return match_e


def deferred_acceptance(
    inst: StableMatchingInstance,
    u_subset: Iterable[str],
    proposal_order: int | Sequence[str] | None = None,
) -> Matching:
    """The stable matching of the instance restricted to u_subset and all of V.

    proposal_order picks the queue discipline: None for first-in-first-out
    in input left order, an int for a seeded arbitrary pick each round, or
    an explicit sequence (a permutation of u_subset) for the initial queue.
    The returned edge set is the same in every case.
    """
    subset = _check_left_subset(inst.graph, u_subset)
    lpos = inst.graph._left_pos
    rng = None
    if proposal_order is None:
        active = [lpos[u] for u in inst.graph.left if u in subset]
    elif isinstance(proposal_order, int):
        active = [lpos[u] for u in inst.graph.left if u in subset]
        rng = random.Random(proposal_order)
    else:
        explicit = list(proposal_order)
        if set(explicit) != subset or len(explicit) != len(subset):
            raise ValueError("proposal_order must be a permutation of u_subset")
        active = [lpos[u] for u in explicit]
    match_e = _run_proposals(inst._dense(), active, rng)
    return Matching(inst.graph, [eid for eid in match_e if eid >= 0])


def induced_map_sm(inst: StableMatchingInstance, u_subset: Iterable[str]) -> frozenset[str]:
    """Right vertices matched in the stable matching for u_subset."""
    return deferred_acceptance(inst, u_subset).matched_right()


def choice_function_sm(inst: StableMatchingInstance, u_subset: Iterable[str]) -> frozenset[str]:
    """Left vertices matched in the stable matching for u_subset."""
    return deferred_acceptance(inst, u_subset).matched_left()


def enumerate_stable_matchings(
    inst: StableMatchingInstance, limit: int = DEFAULT_ORACLE_LIMIT
) -> list[Matching]:
    """All stable matchings, by filtering the full matching enumeration."""
    return [m for m in enumerate_matchings(inst.graph, limit) if is_stable(inst, m)]
