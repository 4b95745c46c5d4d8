"""Command-line front end: generation, ordering, solving, simulation,
verification, timing, and an interactive robber mode.

Every subcommand is deterministic given its files, flags, and seeds;
outputs carry no timestamps.
"""

from __future__ import annotations

import argparse
import sys

from . import generators
from .engine import (
    GameConfig,
    check_pursuit_invariants,
    evaluate_classic,
    evaluate_cweak,
    evaluate_weak,
    load_transcript,
    play,
    save_transcript,
    transcript_to_text,
)
from .errors import GraphFormatError, PursuitError
from .graphs import Graph, load_graph, save_graph
from .orders import (
    DismantlingOrder,
    DominatingOrder,
    depth_table,
    find_dismantling_order,
    find_dominating_order,
    load_order,
    save_order,
    verify_dismantling_order,
    verify_dominating_order,
)
from .retractions import RetractionFamily, check_retraction
from .solver import decide_cop_win, estimate_timing, order_from_protective
from .strategies import (
    ChainPursuitCop,
    CycleEvaderRobber,
    DismantlingPursuitCop,
    DistanceGreedyRobber,
    PrefixRecursiveCop,
    ProtectiveCop,
    RayRunnerRobber,
    ScriptedRobber,
    StationaryRobber,
    TableCop,
    TableRobber,
)

COP_KINDS = ("s_star", "recursive", "protective", "dismantable", "optimal")
ROBBER_KINDS = ("stationary", "greedy", "ray", "h_evader", "adversarial")


def _build_cop(kind: str, graph: Graph, order):
    if kind == "optimal":
        return TableCop(decide_cop_win(graph))
    if order is None:
        order = find_dominating_order(graph)
        if order is None:
            raise PursuitError(f"--cop {kind} needs an order, and the graph is not constructible")
    if kind == "recursive":
        if not isinstance(order, DominatingOrder):
            raise PursuitError("--cop recursive needs a dominating order")
        return PrefixRecursiveCop(order)
    family = RetractionFamily(graph, order)
    if kind == "s_star":
        stuck = "stay" if family.flavor == "dismantling" else "error"
        return ChainPursuitCop(family, when_stuck=stuck)
    if kind == "protective":
        return ProtectiveCop(family)
    if kind == "dismantable":
        if family.flavor != "dismantling":
            raise PursuitError("--cop dismantable needs a dismantling order")
        return DismantlingPursuitCop(family)
    raise PursuitError(f"unknown cop kind {kind!r}")


def _build_robber(kind: str, graph: Graph):
    if kind == "stationary":
        return StationaryRobber()
    if kind == "greedy":
        return DistanceGreedyRobber()
    if kind == "ray":
        return RayRunnerRobber(list(graph.vertices()))
    if kind == "h_evader":
        try:
            cycle = [graph.vertex_by_label(f"a_{i}") for i in range(5)]
            hub = graph.vertex_by_label("c")
        except (KeyError, ValueError):
            raise PursuitError("--robber h_evader needs a labelled wheel-block graph")
        return CycleEvaderRobber(cycle, hub)
    if kind == "adversarial":
        return TableRobber(decide_cop_win(graph))
    if kind.startswith("script:"):
        path = kind.split(":", 1)[1]
        with open(path, "r", encoding="utf-8") as fh:
            script = [int(tok) for tok in fh.read().split()]
        return ScriptedRobber(script)
    raise PursuitError(f"unknown robber kind {kind!r}")


def _cmd_generate(args) -> int:
    built = generators.make(
        args.family, n=args.n, degree=args.degree, radius=args.radius, seed=args.seed
    )
    save_graph(f"{args.out}.graph", built.graph)
    print(f"{args.out}.graph: {built.graph.order} vertices, {built.graph.edge_count()} edges")
    order = built.dominating or built.dismantling
    if order is not None:
        save_order(f"{args.out}.order", order)
        print(f"{args.out}.order: {order.flavor}")
    if built.dominating is not None and built.dismantling is not None:
        save_order(f"{args.out}.dismantling.order", built.dismantling)
        print(f"{args.out}.dismantling.order: dismantling")
    if args.dot:
        with open(f"{args.out}.dot", "w", encoding="utf-8") as fh:
            fh.write(built.graph.to_dot())
    return 0


def _cmd_order(args) -> int:
    graph = load_graph(args.graph)
    if args.flavor == "dismantling":
        order = find_dismantling_order(graph)
    else:
        order = find_dominating_order(graph)
    if order is None:
        print("not constructible")
        return 0
    if args.out:
        save_order(args.out, order)
    print("order " + " ".join(str(v) for v in order.sequence))
    return 0


def _cmd_solve(args) -> int:
    graph = load_graph(args.graph)
    table = decide_cop_win(graph)
    print("cop-win" if table.cop_win else "robber-win")
    if args.table_out:
        with open(args.table_out, "w", encoding="utf-8") as fh:
            n = graph.order
            for c in range(n):
                for r in range(n):
                    fh.write(f"{c} {r} {table.cop_dist[c, r]} {table.robber_dist[c, r]}\n")
    return 0


def _load_any_order(path):
    return load_order(path)


def _cmd_simulate(args) -> int:
    graph = load_graph(args.graph)
    order = _load_any_order(args.order) if args.order else None
    cop = _build_cop(args.cop, graph, order)
    robber = _build_robber(args.robber, graph)
    cfg = GameConfig(graph, cop, robber, max_rounds=args.horizon)
    transcript = play(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(transcript_to_text(transcript))
    if args.json_out:
        save_transcript(args.json_out, transcript)
    out = transcript.outcome
    where = f" at round {out.round}" if out.round is not None else ""
    print(f"{out.kind}{where}")
    return 0


def _cmd_verify(args) -> int:
    graph = load_graph(args.graph)
    failures = []

    if args.order:
        order = _load_any_order(args.order)
        if isinstance(order, DismantlingOrder):
            res = verify_dismantling_order(graph, order)
        else:
            res = verify_dominating_order(graph, order)
        if res:
            print("order: ok")
        else:
            print(f"order: FAIL at rank {res.where}: {res.detail}")
            failures.append("order")

    if args.retraction:
        mapping = {}
        with open(args.retraction, "r", encoding="utf-8") as fh:
            for raw in fh:
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                u, v = (int(x) for x in line.split())
                mapping[u] = v
        fixed = {v for v in graph.vertices() if mapping.get(v) == v}
        res = check_retraction(graph, mapping, fixed)
        if res:
            print(f"retraction: ok onto {len(fixed)} fixed vertices")
        else:
            print(f"retraction: FAIL at {res.where}: {res.detail}")
            failures.append("retraction")

    if args.transcript:
        transcript = load_transcript(args.transcript)
        # the stage/exponent invariants are chain-pursuit properties
        chain = transcript.stages and transcript.cop_kind == "chain"
        inv = check_pursuit_invariants(transcript) if chain else None
        if inv is not None:
            print("pursuit invariants: " + ("ok" if inv else f"FAIL: {inv.detail}"))
            if not inv:
                failures.append("invariants")
        if args.criterion == "classic":
            ok = evaluate_classic(transcript)
            print(f"classic: {'ok' if ok else 'FAIL (no capture)'}")
            if not ok:
                failures.append("classic")
        elif args.criterion == "weak":
            bound = _resolve_bound(args, graph)
            res = evaluate_weak(transcript, bound)
            print("weak: " + ("ok" if res else f"FAIL: {res.detail}"))
            if not res:
                failures.append("weak")
        elif args.criterion == "cweak":
            res = evaluate_cweak(transcript)
            print("cweak: " + ("ok" if res else f"FAIL (revisit at round {res.where})"))
            if not res:
                failures.append("cweak")

    return 1 if failures else 0


def _resolve_bound(args, graph):
    if args.bound == "default":
        if not args.order:
            raise PursuitError("--bound default needs --order to derive depths")
        order = _load_any_order(args.order)
        depths = depth_table(order, strict=False)
        return [(d if d is not None else graph.order) + 1 for d in depths]
    try:
        return int(args.bound)
    except ValueError:
        pass
    bounds = {}
    with open(args.bound, "r", encoding="utf-8") as fh:
        for raw in fh:
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            v, b = (int(x) for x in line.split())
            bounds[v] = b
    return [bounds[v] for v in graph.vertices()]


def _cmd_timing(args) -> int:
    graph = load_graph(args.graph)
    order = _load_any_order(args.order) if args.order else None
    cop = _build_cop(args.cop, graph, order)
    horizon = args.horizon or 4 * graph.order
    profile = estimate_timing(graph, cop, horizon)
    sys.stdout.write(profile.to_text())
    if args.recover_order:
        recovered = order_from_protective(graph, profile)
        print("recovered " + " ".join(str(v) for v in recovered.sequence))
    return 0


def _cmd_play(args, input_fn=input, output_fn=print) -> int:
    graph = load_graph(args.graph)
    order = _load_any_order(args.order) if args.order else None
    cop = _build_cop(args.cop, graph, order)
    horizon = args.horizon or 200

    c = cop.start(graph)
    output_fn(f"cop starts at {c} ({graph.label(c)})")
    r = None
    while r is None:
        raw = input_fn("robber start> ").strip()
        if raw in ("q", "quit"):
            return 0
        try:
            cand = int(raw)
            graph._check(cand)
            r = cand
        except ValueError:
            output_fn("not a vertex; pick an id from the graph")
    if r == c:
        output_fn("captured at round 1")
        return 0

    t = 2
    while t <= horizon:
        if t % 2 == 0:
            c = cop.move(graph, c, r, t)
            output_fn(f"round {t}: cop -> {c} ({graph.label(c)})")
            if c == r:
                output_fn(f"captured at round {t}")
                return 0
        else:
            legal = sorted(graph.neighbors(r))
            move = None
            while move is None:
                raw = input_fn(f"round {t}, robber at {r}, moves {legal}> ").strip()
                if raw in ("q", "quit"):
                    return 0
                try:
                    cand = int(raw)
                except ValueError:
                    output_fn("enter a vertex id")
                    continue
                if cand not in legal:
                    output_fn(f"illegal move {r} -> {cand}")
                    continue
                move = cand
            r = move
            if r == c:
                output_fn(f"captured at round {t}")
                return 0
        t += 1
    output_fn("horizon reached; robber survives")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pursuit",
        description="Pursuit-evasion games on reflexive graphs: generate, order, solve, simulate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a named family as graph (+ order) files")
    g.add_argument("--family", required=True, choices=generators.FAMILIES)
    g.add_argument("--n", type=int)
    g.add_argument("--degree", type=int)
    g.add_argument("--radius", type=int)
    g.add_argument("--seed", type=int)
    g.add_argument("--out", required=True, help="output path prefix")
    g.add_argument("--dot", action="store_true", help="also write a DOT file")
    g.set_defaults(fn=_cmd_generate)

    o = sub.add_parser("order", help="find a dominating/dismantling order")
    o.add_argument("--graph", required=True)
    o.add_argument("--flavor", choices=("dominating", "dismantling"), default="dominating")
    o.add_argument("--out")
    o.set_defaults(fn=_cmd_order)

    s = sub.add_parser("solve", help="exact cop-win verdict")
    s.add_argument("--graph", required=True)
    s.add_argument("--table-out", dest="table_out")
    s.set_defaults(fn=_cmd_solve)

    m = sub.add_parser("simulate", help="play one game and record the transcript")
    m.add_argument("--graph", required=True)
    m.add_argument("--order")
    m.add_argument("--cop", required=True)
    m.add_argument("--robber", required=True)
    m.add_argument("--horizon", type=int)
    m.add_argument("--out", help="transcript text output")
    m.add_argument("--json-out", dest="json_out", help="structured transcript output")
    m.set_defaults(fn=_cmd_simulate)

    v = sub.add_parser("verify", help="check orders, retractions, transcripts, criteria")
    v.add_argument("--graph", required=True)
    v.add_argument("--order")
    v.add_argument("--retraction", help="file of 'u f(u)' lines")
    v.add_argument("--transcript")
    v.add_argument("--criterion", choices=("classic", "weak", "cweak"))
    v.add_argument("--bound", default="default", help="default | <int> | <path>")
    v.set_defaults(fn=_cmd_verify)

    t = sub.add_parser("timing", help="timing profile of a strategy")
    t.add_argument("--graph", required=True)
    t.add_argument("--order")
    t.add_argument("--cop", default="protective")
    t.add_argument("--horizon", type=int)
    t.add_argument("--recover-order", action="store_true", dest="recover_order")
    t.set_defaults(fn=_cmd_timing)

    p = sub.add_parser("play", help="interactive robber against a chosen cop")
    p.add_argument("--graph", required=True)
    p.add_argument("--order")
    p.add_argument("--cop", default="optimal")
    p.add_argument("--horizon", type=int)
    p.set_defaults(fn=_cmd_play)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (PursuitError, GraphFormatError, OSError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
