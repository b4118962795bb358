"""In-process invariant sweep backing the ``selftest`` subcommand.

A compact version of the acceptance suite: seeded instances are run
through the detectors, the solver against the oracle, and the structural
checks on every pipeline stage.  One line per check; exit code 1 on the
first category that fails.
"""

from __future__ import annotations

import json
import sys

from .canonical import find_augmenting_p3, find_dominating_free
from .generators import GenSpec, gen_rejection, gen_strip_instance
from .graph import connected_components, induced_subgraph
from .interval_mwss import verify_consistent
from .oracle import oracle_mwss
from .patterns import find_claw, find_net, find_square_in, square_semi_homogeneous_check
from .solver import solve, solve_component


def _instances(instances: int, seed: int):
    out = []
    half = instances // 2
    for i in range(half):
        spec = GenSpec(
            seed=seed * 100_003 + i,
            mode="rejection",
            nodes=6 + (i % 15),
            weights=("unit", "random", "ties")[i % 3],
        )
        out.append(gen_rejection(spec))
    for i in range(instances - half):
        spec = GenSpec(
            seed=seed * 77_003 + i,
            mode="strip",
            nodes=8 + (i % 24),
            clique_min=1,
            clique_max=4,
            density=(0.3, 0.5, 0.8)[i % 3],
            weights=("unit", "random", "ties")[i % 3],
        )
        out.append(gen_strip_instance(spec))
    return out


def run_selftest(instances: int = 60, seed: int = 0, out=sys.stdout) -> int:
    graphs = _instances(instances, seed)
    failures = 0

    def report(name: str, bad: int, detail: str = ""):
        nonlocal failures
        status = "ok" if bad == 0 else "FAIL"
        line = f"{status} {name}"
        if detail:
            line += f" ({detail})"
        print(line, file=out)
        failures += bad

    bad = sum(
        1 for g in graphs if find_claw(g) is not None or find_net(g) is not None
    )
    report("detectors-clean", bad, f"{len(graphs)} instances")

    bad = 0
    for g in graphs:
        if solve(g).value != oracle_mwss(g)[0]:
            bad += 1
    report("solve-equals-oracle", bad)

    bad = 0
    details = []
    for g in graphs:
        _, _, _, detail = solve_component_or_none(g)
        if detail is not None:
            details.append(detail)
    for detail in details:
        st = detail.state
        for s in st.stable_set:
            if find_augmenting_p3(st, s) or find_dominating_free(st, s):
                bad += 1
        n, m = detail.graph.n, detail.graph.m
        if detail.canonical_steps > 50 * (n + m):
            bad += 1
    report("canonical-fixpoint", bad, f"{len(details)} pipeline components")

    bad = 0
    for detail in details:
        for strip, co in zip(detail.interval.strips, detail.orders):
            if verify_consistent(strip.graph, co) is not None:
                bad += 1
            if find_claw(strip.graph) is not None:
                bad += 1
            for lo, hi in zip(strip.local_cliques, strip.local_cliques[1:]):
                if find_square_in(strip.graph, lo, hi) is not None:
                    bad += 1
    report("post-transform-interval", bad)

    bad = 0
    for detail in details:
        g = detail.graph
        for strip in detail.decomposition.strips:
            for lo, hi in zip(strip.cliques, strip.cliques[1:]):
                if square_semi_homogeneous_check(g, lo, hi) is not None:
                    bad += 1
    report("strips-square-semi-homogeneous", bad)

    sample = graphs[0]
    payloads = []
    for _ in range(2):
        s = solve(sample)
        payloads.append(json.dumps({"value": s.value, "set": list(s.nodes)}))
    report("determinism", 0 if payloads[0] == payloads[1] else 1)

    print(("PASS" if failures == 0 else "FAIL") + f" selftest ({len(graphs)} instances)", file=out)
    return 0 if failures == 0 else 1


def solve_component_or_none(g):
    """Per-component pipeline detail for the largest component of g."""
    comps = connected_components(g)
    if not comps:
        return 0, (), "empty", None
    comp = max(comps, key=len)
    if len(comp) == g.n:
        sub = g
    else:
        sub, _ = induced_subgraph(g, comp)
    value, nodes, route, detail = solve_component(sub, collect=True)
    return value, nodes, route, detail
