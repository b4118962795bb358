"""Square elimination inside clique-strips by weighted diagonal insertion.

For each consecutive clique pair the active sides are A (nodes of the
lower clique seeing the upper one) and B (the converse).  Stages then
either retire a node of A universal to B, or add the cheaper diagonal of
an isolated square, or join a node to all but the heaviest of its
non-neighbors in B.  Every added edge is a diagonal of a square of the
current graph, which keeps the graph claw-free and leaves the maximum
stable set weight of the strip, and of every subgraph obtained by
deleting a removal-clique neighborhood, unchanged.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import StructuralError
from .graph import Graph
from .patterns import find_square_in

MAX_STAGE_SLACK = 8  # stages per pair are bounded by 3*|K_i|; guard a bit above


def semi_homog_pair_certificate(adj: dict, a1: int, bbar, universe) -> tuple | None:
    """Verify ({a1}, Bbar) is semi-homogeneous and each pair is a diagonal.

    Test support for the kill-diags cases, evaluated on the overlay state
    before the stage adds its edges.  Returns None when sound, else a
    witness tuple.
    """
    bbar = set(bbar)
    for u in universe:
        if u == a1 or u in bbar:
            continue
        au = adj[u]
        if a1 in au:
            continue
        hits = au & bbar
        if hits and hits != bbar:
            return ("not_semi_homogeneous", u)
    for b in bbar:
        common = adj[a1] & adj[b]
        if not any(common - adj[p] - {p} for p in common):
            return ("not_a_diagonal", a1, b)
    return None


class EliminationState:
    """Stage machine for one consecutive clique pair over a mutable overlay."""

    __slots__ = ("adj", "weights", "a", "b", "d", "added", "actions", "certify")

    def __init__(self, adj: dict, weights, ki, kj, certify: bool = False):
        self.adj = adj
        self.weights = weights
        self.a = {u for u in ki if adj[u] & set(kj)}
        self.b = {v for v in kj if adj[v] & set(ki)}
        self.d = {u: len(adj[u] & self.b) for u in self.a}
        for v in self.b:
            self.d[v] = len(adj[v] & self.a)
        self.added: list[tuple[int, int]] = []
        self.actions: list[str] = []
        self.certify = certify

    def _add_edge(self, u: int, v: int):
        self.adj[u].add(v)
        self.adj[v].add(u)
        self.added.append((u, v) if u < v else (v, u))
        self.d[u] += 1
        self.d[v] += 1

    def stage(self) -> str:
        """Run one stage; A must be non-empty.  Returns the action taken."""
        a_max = max(self.a, key=lambda u: (self.d[u], -u))
        if self.d[a_max] == len(self.b):
            self.a.discard(a_max)
            dead = []
            for v in self.b:
                if a_max in self.adj[v]:
                    self.d[v] -= 1
                    if self.d[v] == 0:
                        dead.append(v)
            for v in dead:
                self.b.discard(v)
            self.actions.append("remove")
            return "remove"
        if self.d[a_max] == len(self.b) - 1:
            (b1,) = self.b - self.adj[a_max]
            in_a = self.adj[b1] & self.a
            if not in_a:
                raise StructuralError(
                    "stage", (b1,), "square-elimination stage found b1 null to A"
                )
            a2 = min(in_a)
            if self.d[a2] == len(self.b) - 1:
                (b2,) = self.b - self.adj[a2]
                w = self.weights
                if w[a2] + w[b2] >= w[a_max] + w[b1]:
                    self._add_edge(a_max, b1)
                else:
                    self._add_edge(a2, b2)
                self.actions.append("kill_c4")
                return "kill_c4"
            self._kill_diags(a2)
            self.actions.append("kill_diags")
            return "kill_diags"
        self._kill_diags(a_max)
        self.actions.append("kill_diags")
        return "kill_diags"

    def _kill_diags(self, abar: int):
        missing = self.b - self.adj[abar]
        if self.certify:
            bad = semi_homog_pair_certificate(self.adj, abar, missing, self.adj.keys())
            if bad is not None:
                raise StructuralError("certificate", bad, "kill-diags certificate failed")
        w = self.weights
        spare = max(missing, key=lambda v: (w[v], -v))
        for v in sorted(missing):
            if v != spare:
                self._add_edge(abar, v)

    def run(self, limit: int | None = None) -> int:
        if limit is None:
            limit = 3 * (len(self.a) or 1) + MAX_STAGE_SLACK
        stages = 0
        while self.a:
            if stages > limit:
                raise StructuralError(
                    "stage", tuple(sorted(self.a)), "stage budget exceeded"
                )
            self.stage()
            stages += 1
        return stages


@dataclass(frozen=True)
class TransformedStrip:
    """One strip after elimination, materialized as its own graph."""

    cliques: tuple[tuple[int, ...], ...]  # original ids
    graph: Graph  # local ids
    to_local: dict
    to_orig: tuple
    local_cliques: tuple[tuple[int, ...], ...]

    @property
    def nodes(self) -> tuple[int, ...]:
        return self.to_orig


@dataclass(frozen=True)
class IntervalResult:
    strips: tuple[TransformedStrip, ...]
    added_edges: tuple[tuple[int, int], ...]  # original ids
    stage_counts: tuple[tuple[int, ...], ...]  # per strip, per pair

    def combined_graph(self, base: Graph):
        """Union of the transformed strips as one graph (test support)."""
        from .graph import SubgraphMap

        keep = sorted(v for s in self.strips for v in s.to_orig)
        to_sub = {v: i for i, v in enumerate(keep)}
        edges = []
        for s in self.strips:
            for u, v in s.graph.edges():
                edges.append((to_sub[s.to_orig[u]], to_sub[s.to_orig[v]]))
        g = Graph(len(keep), edges, [base.weights[v] for v in keep], _trusted=True)
        return g, SubgraphMap(to_sub, tuple(keep))


def interval_transform(g: Graph, strips, certify: bool = False) -> IntervalResult:
    """Destroy every square inside each strip, preserving stable set weights.

    ``strips`` is a sequence of clique families (ordered cliques of
    original node ids), as produced by the decomposition.  Each strip is
    processed pair by pair on a shared overlay and then materialized as
    an induced graph together with the log of added edges.  ``certify``
    additionally re-checks the kill-diags certificate at every stage and
    re-runs the square detector on every pair afterwards (test use only).
    """
    families = [tuple(tuple(k) for k in getattr(s, "cliques", s)) for s in strips]
    result_strips = []
    all_added: list[tuple[int, int]] = []
    stage_counts = []
    for family in families:
        nodes = sorted(v for k in family for v in k)
        node_set = set(nodes)
        adj = {v: set(g.adj(v)) & node_set for v in nodes}
        counts = []
        for idx in range(len(family) - 1):
            ki, kj = family[idx], family[idx + 1]
            state = EliminationState(adj, g.weights, ki, kj, certify=certify)
            counts.append(state.run(3 * len(ki) + MAX_STAGE_SLACK))
            all_added.extend(state.added)
        stage_counts.append(tuple(counts))
        to_orig = tuple(nodes)
        to_local = {v: i for i, v in enumerate(nodes)}
        edges = []
        for u in nodes:
            lu = to_local[u]
            for v in adj[u]:
                if v > u:
                    edges.append((lu, to_local[v]))
        local_graph = Graph(
            len(nodes), edges, [g.weights[v] for v in nodes], _trusted=True
        )
        local_cliques = tuple(tuple(sorted(to_local[v] for v in k)) for k in family)
        result_strips.append(
            TransformedStrip(family, local_graph, to_local, to_orig, local_cliques)
        )
        if certify:
            for idx in range(len(family) - 1):
                lo = [to_local[v] for v in family[idx]]
                hi = [to_local[v] for v in family[idx + 1]]
                sq = find_square_in(local_graph, lo, hi)
                if sq is not None:
                    raise StructuralError(
                        "square", sq.nodes, "square survived elimination"
                    )
    return IntervalResult(tuple(result_strips), tuple(all_added), tuple(stage_counts))
