"""End-to-end solver: preprocessing, dispatch, and the final maximum.

``solve`` deletes non-positive-weight nodes, collapses twins, and handles
each connected component on its own: components without a stable set of
size four go to exact bounded enumeration, the rest through the strip
pipeline, where the answer is the best of the strip optimum and, for
every node v of the removal clique, v's weight plus the strip optimum
avoiding N[v].  Witness sets are lifted back through the twin log.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .canonical import CanonicalState, canonicalize
from .decomposition import Decomposition, decompose
from .errors import MWSSError
from .graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    induced_subgraph,
    remove_twins,
)
from .interval_mwss import ConsistentOrder, consistent_order, mwss_on_order
from .square_elimination import IntervalResult, interval_transform

ROUTE_ALPHA3 = "alpha3_fallback"
ROUTE_PIPELINE = "strip_pipeline"
ROUTE_MERGE = "component_merge"


@dataclass(frozen=True)
class Solution:
    value: int
    nodes: tuple[int, ...]
    route: str
    certificates: dict | None = None


@dataclass
class PipelineDetail:
    """Intermediate artifacts of one component's pipeline run (trace/tests)."""

    graph: Graph
    state: CanonicalState
    decomposition: Decomposition
    interval: IntervalResult
    orders: tuple[ConsistentOrder, ...]
    base_value: int
    base_nodes: tuple[int, ...]
    per_vertex: tuple[tuple[int, int, tuple[int, ...]], ...]
    canonical_steps: int
    dp_passes: int


def _greedy_members(g: Graph) -> list[int]:
    blocked = bytearray(g.n)
    members = []
    for v in range(g.n):
        if not blocked[v]:
            members.append(v)
            for u in g.neighbors(v):
                blocked[u] = 1
    return members


def find_stable4(g: Graph) -> tuple[int, ...] | None:
    """A stable set of size four, or None exactly when alpha(G) <= 3.

    Fast path: an ascending greedy maximal stable set.  If that stays
    below four, decide exactly: for every non-edge, look for a second
    non-adjacent pair among the nodes seeing neither endpoint.
    """
    greedy = _greedy_members(g)
    if len(greedy) >= 4:
        return tuple(greedy[:4])
    full = set(range(g.n))
    for u in range(g.n):
        au = g.adj(u)
        for v in range(u + 1, g.n):
            if v in au:
                continue
            rest = sorted(full - au - g.adj(v) - {u, v})
            rest_set = set(rest)
            for x in rest:
                others = rest_set - g.adj(x)
                others.discard(x)
                if others:
                    return tuple(sorted((u, v, x, min(others))))
    return None


def alpha3_fallback(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact optimum when alpha(G) <= 3: scan sets of size 0, 1, 2, 3."""
    best = 0
    best_set: tuple[int, ...] = ()
    w = g.weights
    for v in range(g.n):
        if w[v] > best:
            best, best_set = w[v], (v,)
    full = set(range(g.n))
    for u in range(g.n):
        au = g.adj(u)
        for v in range(u + 1, g.n):
            if v in au:
                continue
            pair = w[u] + w[v]
            if pair > best:
                best, best_set = pair, (u, v)
            rest = full - au - g.adj(v)
            rest.discard(u)
            rest.discard(v)
            if rest:
                z = max(rest, key=lambda t: (w[t], -t))
                if pair + w[z] > best:
                    best, best_set = pair + w[z], tuple(sorted((u, v, z)))
    return best, best_set


def _extend_to_maximal(g: Graph, seed) -> CanonicalState:
    members = set(seed)
    blocked = set()
    for v in members:
        blocked.update(g.adj(v))
    for v in range(g.n):
        if v not in members and v not in blocked:
            members.add(v)
            blocked.update(g.adj(v))
    return CanonicalState(g, members)


def solve_component(
    g: Graph, collect: bool = False
) -> tuple[int, tuple[int, ...], str, PipelineDetail | None]:
    """Solve one connected component (already positive-weight, twin-free)."""
    seed4 = find_stable4(g)
    if seed4 is None:
        value, nodes = alpha3_fallback(g)
        return value, nodes, ROUTE_ALPHA3, None
    state, stats = canonicalize(g, _extend_to_maximal(g, seed4))
    dec = decompose(g, state)
    interval = interval_transform(g, dec.strips)
    orders = tuple(
        consistent_order(s.graph, s.local_cliques) for s in interval.strips
    )
    weights_local = [s.graph.weights for s in interval.strips]

    def strip_optimum(excluded_orig: frozenset):
        total = 0
        chosen: list[int] = []
        for s, co, w in zip(interval.strips, orders, weights_local):
            if excluded_orig:
                local_excluded = {
                    s.to_local[v] for v in excluded_orig if v in s.to_local
                }
            else:
                local_excluded = frozenset()
            value, nodes = mwss_on_order(co, w, local_excluded)
            total += value
            chosen.extend(s.to_orig[v] for v in nodes)
        return total, tuple(sorted(chosen))

    base_value, base_nodes = strip_optimum(frozenset())
    best_value, best_nodes = base_value, base_nodes
    per_vertex = []
    removal = dec.removal
    assert len(removal) <= math.isqrt(2 * g.m) + 1
    for v in removal:
        closed = frozenset(closed_neighborhood(g, (v,)))
        value, nodes = strip_optimum(closed)
        value += g.weights[v]
        nodes = tuple(sorted(nodes + (v,)))
        if collect:
            per_vertex.append((v, value, nodes))
        if value > best_value or (value == best_value and nodes < best_nodes):
            best_value, best_nodes = value, nodes
    detail = None
    if collect:
        detail = PipelineDetail(
            graph=g,
            state=state,
            decomposition=dec,
            interval=interval,
            orders=orders,
            base_value=base_value,
            base_nodes=base_nodes,
            per_vertex=tuple(per_vertex),
            canonical_steps=stats.steps,
            dp_passes=len(removal) + 1,
        )
    return best_value, best_nodes, ROUTE_PIPELINE, detail


def solve(g: Graph, collect_trace: bool = False, validate: bool = True) -> Solution:
    """Exact maximum weight stable set of a {claw, net}-free graph.

    The input is trusted to be {claw, net}-free; structural contract
    violations surface as ``StructuralError`` with a witness.
    """
    positive = [v for v in range(g.n) if g.weights[v] > 0]
    if len(positive) < g.n:
        g1, keep_map = induced_subgraph(g, positive)
    else:
        g1, keep_map = g, None
    reduction = remove_twins(g1)
    g2 = reduction.graph
    comps = connected_components(g2)
    total = 0
    chosen: list[int] = []
    routes = []
    details = [] if collect_trace else None
    for comp in comps:
        if len(comp) == g2.n:
            sub, sub_map = g2, None
        else:
            sub, sub_map = induced_subgraph(g2, comp)
        value, nodes, route, detail = solve_component(sub, collect=collect_trace)
        total += value
        if sub_map is not None:
            nodes = sub_map.lift(nodes)
        chosen.extend(nodes)
        routes.append(route)
        if collect_trace:
            details.append(detail)
    lifted = reduction.lift(chosen)
    if keep_map is not None:
        lifted = keep_map.lift(lifted)
    if validate:
        if not g.is_stable(lifted):
            raise MWSSError("internal error: produced set is not stable")
        if g.weight_of(lifted) != total:
            raise MWSSError("internal error: produced set weight mismatch")
    if not routes:
        route = ROUTE_ALPHA3
    elif len(routes) == 1:
        route = routes[0]
    else:
        route = ROUTE_MERGE
    certificates = None
    if collect_trace:
        certificates = {
            "routes": tuple(routes),
            "components": len(comps),
            "twin_steps": len(reduction.steps),
            "details": details,
        }
    return Solution(total, tuple(sorted(lifted)), route, certificates)
