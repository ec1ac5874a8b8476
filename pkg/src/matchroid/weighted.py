"""Weighted matching instances with exact arithmetic and a deterministic
tie-break, plus the induced map from left-vertex subsets to the right
vertices covered by the optimum.

Weights are exact (int or Fraction; floats are rejected).  Instances need
not have distinct matching weights: the optimum is made unique by maximizing
the perturbed weight

    w'(e) = w(e) * 2**(m + 1) - 2**edge_id        (m = number of edges)

over matchings, after scaling all weights to integers by their common
denominator.  The perturbation maximizes the true weight first and, among
weight ties, minimizes the edge-id bitmask value, so exactly one matching is
optimal for every instance and every left-vertex subset.  Edge ids survive
restriction, which keeps the tie-break stable under restriction.

The solver grows the matching by successive maximum-gain augmenting paths
(Bellman-Ford style, exact integers), stopping when no path has positive
gain; this is exact for any sign pattern.  Instances whose weights are
positive, distinct, and superincreasing (each exceeding the sum of all
smaller ones, e.g. distinct powers of two) take a greedy fast path instead,
which is optimal there because the largest remaining weight always dominates
the rest combined.  An exhaustive-enumeration oracle cross-checks both
routes in the tests.
"""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    DEFAULT_ORACLE_LIMIT,
    BipartiteGraph,
    Matching,
    _as_matching,
    _check_left_subset,
    enumerate_matchings,
)

ExactWeight = int | Fraction


class WeightFunction:
    """Exact weights aligned with a graph's edge list (one per edge position)."""

    def __init__(self, values: Iterable[ExactWeight]):
        vals = []
        for v in values:
            if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
                raise TypeError(f"weights must be int or Fraction, got {v!r}")
            vals.append(v)
        self.values = tuple(vals)

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightFunction):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return f"WeightFunction({list(self.values)!r})"


@dataclass
class _Dense:
    edge_left: list[int]
    edge_right: list[int]
    perturbed: list[int]  # by edge position
    perturbed_by_id: dict[int, int]
    desc_positions: list[int]  # positions sorted by descending true weight
    superincreasing: bool


class WeightedInstance:
    """A bipartite graph with one exact weight per edge."""

    def __init__(self, graph: BipartiteGraph, weights: Iterable[ExactWeight] | WeightFunction):
        self.graph = graph
        self.weights = weights if isinstance(weights, WeightFunction) else WeightFunction(weights)
        if len(self.weights) != len(graph.edges):
            raise ValueError(
                f"expected {len(graph.edges)} weights, got {len(self.weights)}"
            )
        self._weight_by_id = dict(zip(graph.edge_ids, self.weights.values))
        self._dense_cache: _Dense | None = None

    def weight_of_edge(self, eid: int) -> ExactWeight:
        try:
            return self._weight_by_id[eid]
        except KeyError:
            raise ValueError(f"unknown edge id {eid!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, WeightedInstance):
            return NotImplemented
        return self.graph == other.graph and self.weights == other.weights

    def __repr__(self):
        return f"WeightedInstance({self.graph!r})"

    def _dense(self) -> _Dense:
        if self._dense_cache is None:
            g = self.graph
            scale = math.lcm(
                *(v.denominator if isinstance(v, Fraction) else 1 for v in self.weights)
            ) if len(self.weights) else 1
            scaled = [int(v * scale) for v in self.weights.values]
            shift = (max(g.edge_ids) + 2) if g.edge_ids else 1
            perturbed = [
                (scaled[pos] << shift) - (1 << g.edge_ids[pos])
                for pos in range(len(g.edges))
            ]
            by_id = {g.edge_ids[pos]: perturbed[pos] for pos in range(len(g.edges))}
            desc = sorted(
                range(len(g.edges)), key=lambda pos: scaled[pos], reverse=True
            )
            asc = sorted(scaled)
            total = 0
            superinc = bool(scaled) and asc[0] > 0
            for w in asc:
                if w <= total:
                    superinc = False
                    break
                total += w
            self._dense_cache = _Dense(
                list(g._edge_left), list(g._edge_right), perturbed, by_id, desc, superinc
            )
        return self._dense_cache


def matching_weight(inst: WeightedInstance, m) -> ExactWeight:
    """Exact total weight of the matching; 0 for the empty matching."""
    mm = _as_matching(inst.graph, m)
    return sum((inst.weight_of_edge(eid) for eid in mm.edge_ids), start=0)


def _solve_greedy(dense: _Dense, allowed: list[bool], n_right: int, edge_ids) -> list[int]:
    used_left = [False] * len(allowed)
    used_right = [False] * n_right
    out = []
    for pos in dense.desc_positions:
        u = dense.edge_left[pos]
        v = dense.edge_right[pos]
        if allowed[u] and not used_left[u] and not used_right[v]:
            used_left[u] = used_right[v] = True
            out.append(edge_ids[pos])
    return out


def _solve_augmenting(dense: _Dense, allowed: list[bool], n_right: int, edge_ids) -> list[int]:
    eL, eR, P = dense.edge_left, dense.edge_right, dense.perturbed
    n_left = len(allowed)
    m = len(eL)
    match_l = [-1] * n_left  # edge position or -1
    match_r = [-1] * n_right
    max_rounds = n_left + n_right + 2
    while True:
        dist_l: list[int | None] = [None] * n_left
        dist_r: list[int | None] = [None] * n_right
        parent_r = [-1] * n_right
        for u in range(n_left):
            if allowed[u] and match_l[u] == -1:
                dist_l[u] = 0
        changed = True
        rounds = 0
        while changed:
            changed = False
            rounds += 1
            if rounds > max_rounds:
                raise RuntimeError("augmenting-path search did not converge")
            for pos in range(m):
                u = eL[pos]
                if not allowed[u]:
                    continue
                v = eR[pos]
                if match_r[v] == pos:
                    dv = dist_r[v]
                    if dv is not None:
                        cand = dv - P[pos]
                        du = dist_l[u]
                        if du is None or cand > du:
                            dist_l[u] = cand
                            changed = True
                else:
                    du = dist_l[u]
                    if du is not None:
                        cand = du + P[pos]
                        dv = dist_r[v]
                        if dv is None or cand > dv:
                            dist_r[v] = cand
                            parent_r[v] = pos
                            changed = True
        best_v = -1
        best_gain = 0
        for v in range(n_right):
            if match_r[v] == -1 and dist_r[v] is not None and dist_r[v] > best_gain:
                best_gain = dist_r[v]
                best_v = v
        if best_v < 0:
            break
        v = best_v
        while True:
            pos = parent_r[v]
            u = eL[pos]
            prev = match_l[u]
            match_l[u] = pos
            match_r[v] = pos
            if prev == -1:
                break
            v = eR[prev]
    return [edge_ids[pos] for pos in match_l if pos >= 0]


def _allowed_mask(graph: BipartiteGraph, subset: set[str]) -> list[bool]:
    return [u in subset for u in graph.left]


def max_weight_matching(inst: WeightedInstance, u_subset: Iterable[str]) -> Matching:
    """The unique perturbed-weight optimum among matchings using only u_subset."""
    subset = _check_left_subset(inst.graph, u_subset)
    dense = inst._dense()
    allowed = _allowed_mask(inst.graph, subset)
    n_right = len(inst.graph.right)
    if dense.superincreasing:
        ids = _solve_greedy(dense, allowed, n_right, inst.graph.edge_ids)
    else:
        ids = _solve_augmenting(dense, allowed, n_right, inst.graph.edge_ids)
    return Matching(inst.graph, ids)


def oracle_max_weight(
    inst: WeightedInstance, u_subset: Iterable[str], limit: int = DEFAULT_ORACLE_LIMIT
) -> Matching:
    """Same contract as max_weight_matching, by scanning every matching."""
    subset = _check_left_subset(inst.graph, u_subset)
    sub = inst.graph.restrict(subset | set(inst.graph.right))
    dense = inst._dense()
    best_ids: tuple[int, ...] = ()
    best_score = 0
    for m in enumerate_matchings(sub, limit):
        score = sum(dense.perturbed_by_id[eid] for eid in m.edge_ids)
        if score > best_score:
            best_score = score
            best_ids = m.edge_ids
    return Matching(inst.graph, best_ids)


def induced_map_mm(inst: WeightedInstance, u_subset: Iterable[str]) -> frozenset[str]:
    """Right vertices covered by the optimum matching for u_subset."""
    return max_weight_matching(inst, u_subset).matched_right()


def choice_function_mm(inst: WeightedInstance, u_subset: Iterable[str]) -> frozenset[str]:
    """Left vertices covered by the optimum matching for u_subset."""
    return max_weight_matching(inst, u_subset).matched_left()
