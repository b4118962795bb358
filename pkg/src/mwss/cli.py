"""Command line interface.

Exit codes: 0 success, 1 structural violation or failed check (with a
witness on stderr), 2 usage or parse errors.  External node ids are
1-based; all randomized subcommands require an explicit seed.
"""

from __future__ import annotations

import argparse
import json
import os
import statistics
import sys
import time

from .canonical import canonicalize, greedy_maximal_stable_set
from .errors import GraphInputError, GraphParseError, MWSSError, StructuralError
from .generators import GenSpec, generate
from .graph import Graph, connected_components
from .graphio import load_graph, parse_graph, serialize_graph
from .oracle import DEFAULT_ORACLE_LIMIT, oracle_mwss
from .patterns import find_claw, find_net
from .solver import find_stable4, solve, solve_component
from . import selftest as selftest_mod

ORACLE_LIMIT_ENV = "MWSS_ORACLE_LIMIT"
ORACLE_CHECK_LIMIT = 24  # default gate for solve --oracle-check


def _ext(nodes) -> list[int]:
    return [v + 1 for v in nodes]


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2))


def _oracle_limit(default: int = DEFAULT_ORACLE_LIMIT) -> int:
    raw = os.environ.get(ORACLE_LIMIT_ENV)
    return int(raw) if raw else default


def _load(path: str) -> Graph:
    if path == "-":
        return parse_graph(sys.stdin.read())
    return load_graph(path)


def cmd_solve(args) -> int:
    g = _load(args.graph)
    solution = solve(g, collect_trace=args.trace)
    payload = {
        "n": g.n,
        "m": g.m,
        "value": solution.value,
        "set": _ext(solution.nodes),
        "route": solution.route,
    }
    if args.oracle_check:
        limit = _oracle_limit(ORACLE_CHECK_LIMIT)
        if g.n > limit:
            print(
                f"oracle check skipped: n={g.n} exceeds limit {limit}",
                file=sys.stderr,
            )
        else:
            value, _ = oracle_mwss(g, limit)
            payload["oracle_checked"] = True
            payload["oracle_value"] = value
            if value != solution.value:
                print(
                    f"oracle mismatch: solver={solution.value} oracle={value}",
                    file=sys.stderr,
                )
                return 1
    if args.trace and solution.certificates:
        payload["trace"] = {
            "components": solution.certificates["components"],
            "twin_steps": solution.certificates["twin_steps"],
            "routes": list(solution.certificates["routes"]),
        }
    if args.json:
        _emit_json(payload)
    else:
        print(f"value {solution.value}")
        print("set " + " ".join(str(v) for v in _ext(solution.nodes)))
        if payload.get("oracle_checked"):
            print("oracle agreed")
    return 0


def cmd_check(args) -> int:
    g = _load(args.graph)
    claw = find_claw(g)
    net = find_net(g)
    if args.json:
        _emit_json(
            {
                "n": g.n,
                "m": g.m,
                "claw": _ext(claw.nodes) if claw else None,
                "net": _ext(net.nodes) if net else None,
            }
        )
    else:
        print(f"claw: {' '.join(map(str, _ext(claw.nodes))) if claw else 'none'}")
        print(f"net: {' '.join(map(str, _ext(net.nodes))) if net else 'none'}")
    return 1 if (claw or net) else 0


def cmd_decompose(args) -> int:
    g = _load(args.graph)
    comps = connected_components(g)
    if len(comps) > 1:
        print("decompose expects a connected graph", file=sys.stderr)
        return 1
    if find_stable4(g) is None:
        _emit_json({"n": g.n, "alpha_ge_4": False})
        return 0
    _, _, _, detail = solve_component(g, collect=True)
    payload = {"n": g.n, "alpha_ge_4": True}
    dec = detail.decomposition
    payload.update(
        {
            "stable_set": _ext(detail.state.stable_set),
            "wing_order": _ext(dec.wing_order),
            "core": _ext(dec.core),
            "kind": dec.kind,
            "anchor": {"case": dec.anchor.case, "position": dec.anchor.position},
            "removal_clique": _ext(dec.removal),
            "companion": _ext(dec.companion),
            "strips": [[_ext(k) for k in strip.cliques] for strip in dec.strips],
        }
    )
    if args.trace:
        payload["added_edges"] = [[u + 1, v + 1] for u, v in detail.interval.added_edges]
        payload["orders"] = [
            _ext(s.to_orig[v] for v in co.order)
            for s, co in zip(detail.interval.strips, detail.orders)
        ]
    _emit_json(payload)
    return 0


def cmd_canonicalize(args) -> int:
    g = _load(args.graph)
    state, stats = canonicalize(g, greedy_maximal_stable_set(g))
    if args.json:
        _emit_json(
            {
                "n": g.n,
                "m": g.m,
                "stable_set": _ext(state.stable_set),
                "size": len(state.members),
                "augmentations": stats.augmentations,
                "alternations": stats.alternations,
                "steps": stats.steps,
            }
        )
    else:
        print("set " + " ".join(str(v) for v in _ext(state.stable_set)))
    return 0


def cmd_gen(args) -> int:
    spec = GenSpec(
        seed=args.seed,
        mode=args.mode,
        nodes=args.nodes,
        clique_min=args.clique_min,
        clique_max=args.clique_max,
        density=args.density,
        weights=args.weights,
        weight_lo=args.weight_lo,
        weight_hi=args.weight_hi,
    )
    g = generate(spec)
    comments = (
        "generated by mwss gen",
        "prng mt19937",
        f"spec seed={spec.seed} mode={spec.mode} nodes={spec.nodes} "
        f"cliques={spec.clique_min}..{spec.clique_max} density={spec.density} "
        f"weights={spec.weights}",
    )
    text = serialize_graph(g, comments)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def cmd_oracle(args) -> int:
    g = _load(args.graph)
    value, nodes = oracle_mwss(g, _oracle_limit())
    if args.json:
        _emit_json({"n": g.n, "value": value, "set": _ext(nodes)})
    else:
        print(f"value {value}")
        print("set " + " ".join(str(v) for v in _ext(nodes)))
    return 0


def cmd_bench(args) -> int:
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = []
    prev_median = None
    for n in sizes:
        spec = GenSpec(
            seed=args.seed,
            mode="strip",
            nodes=n,
            clique_min=args.clique_min,
            clique_max=args.clique_max,
            density=args.density,
            weights="random",
        )
        t0 = time.perf_counter()
        g = generate(spec)
        gen_s = time.perf_counter() - t0
        times = []
        value = None
        for _ in range(args.repeats):
            t0 = time.perf_counter()
            solution = solve(g)
            times.append(time.perf_counter() - t0)
            value = solution.value
        median = statistics.median(times)
        ratio = (median / prev_median) if prev_median else None
        rows.append(
            {
                "n": n,
                "m": g.m,
                "gen_seconds": round(gen_s, 4),
                "median_solve_seconds": round(median, 4),
                "ratio_to_previous": round(ratio, 3) if ratio else None,
                "value": value,
            }
        )
        prev_median = median
    if args.json:
        _emit_json({"rows": rows})
    else:
        print(f"{'n':>8} {'m':>9} {'gen_s':>8} {'solve_s':>9} {'ratio':>7}")
        for r in rows:
            ratio = f"{r['ratio_to_previous']:.2f}" if r["ratio_to_previous"] else "-"
            print(
                f"{r['n']:>8} {r['m']:>9} {r['gen_seconds']:>8.3f} "
                f"{r['median_solve_seconds']:>9.3f} {ratio:>7}"
            )
    return 0


def cmd_selftest(args) -> int:
    return selftest_mod.run_selftest(
        instances=args.instances, seed=args.seed, out=sys.stdout
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mwss",
        description="Maximum weight stable sets in {claw, net}-free graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a graph file exactly")
    p.add_argument("graph", help="graph file path, or - for stdin")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle-check", action="store_true")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("check", help="run the claw and net detectors")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="print the strip decomposition as JSON")
    p.add_argument("graph")
    p.add_argument("--trace", action="store_true", help="include added edges and orders")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("canonicalize", help="canonical stable set from a greedy seed")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("gen", help="generate a {claw, net}-free instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=("strip", "rejection"), default="strip")
    p.add_argument("--nodes", type=int, default=40)
    p.add_argument("--clique-min", type=int, default=2)
    p.add_argument("--clique-max", type=int, default=6)
    p.add_argument("--density", type=float, default=0.5)
    p.add_argument("--weights", choices=("unit", "random", "ties"), default="unit")
    p.add_argument("--weight-lo", type=int, default=1)
    p.add_argument("--weight-hi", type=int, default=100)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle", help="brute-force optimum (size guarded)")
    p.add_argument("graph")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("bench", help="scaling benchmark on strip instances")
    p.add_argument("--sizes", default="1000,4000,16000,64000")
    p.add_argument("--repeats", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clique-min", type=int, default=7)
    p.add_argument("--clique-max", type=int, default=11)
    p.add_argument("--density", type=float, default=0.6)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("selftest", help="run the invariant suite on seeded instances")
    p.add_argument("--instances", type=int, default=60)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except GraphInputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except StructuralError as exc:
        print(f"structural violation: {exc}", file=sys.stderr)
        return 1
    except MWSSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"cannot read {exc.filename}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
