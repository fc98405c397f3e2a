"""Command-line front end.

    graphvi compare [--index vi|rwi|vin ...] [--graph FILE] [--adjacency FILE] A.labels B.labels
    graphvi experiment {chain-single,chain-block,gaussian,grid,triangle} [options]
    graphvi build {chain,gaussian,grid} [options]

Exit status is 0 on success, 2 on a usage error and 1 on a data error.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import io
from .experiments import (
    DEFAULT_EPS,
    GRID_VARIANTS,
    format_plot_data,
    format_report,
    rwi_triangle_search,
    scenario_chain_block,
    scenario_chain_single,
    scenario_gaussian,
    scenario_grid,
)
from .graphs import CHAIN_MODES, chain_adjacency, chain_graph, gaussian_similarity, grid_similarity
from .graphs import sample_gaussian, threshold_adjacency
from .metrics import vi
from .random_walk import rwi, transition_model
from .vin import vin

INDICES = ("vi", "rwi", "vin")
_BASES = {"e": math.e, "2": 2.0}


def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError(f"seed must be an unsigned 64-bit integer, got {text}")
    return v


def _nonneg(text: str) -> float:
    v = float(text)
    if not v >= 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative number, got {text}")
    return v


def _positive_int(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--log-base", choices=sorted(_BASES), default="e")
    p.add_argument("--output", choices=("table", "tsv"), default="table")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphvi", description="Compare clusterings with VI, RWI and VIN."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cmp_ = sub.add_parser("compare", help="compare two label files")
    cmp_.add_argument("labels_a")
    cmp_.add_argument("labels_b")
    cmp_.add_argument("--index", action="append", choices=INDICES, help="repeatable; default vi")
    cmp_.add_argument("--graph", metavar="FILE", help="similarity edge list 'i j w' (needed by rwi)")
    cmp_.add_argument("--adjacency", metavar="FILE", help="edge list 'i j' (used by vin)")
    cmp_.add_argument(
        "--epsilon",
        type=_nonneg,
        default=DEFAULT_EPS,
        help="threshold applied to --graph when vin has no --adjacency (default e^-1)",
    )
    cmp_.add_argument("--self-loop", type=_nonneg, default=0.0, metavar="W",
                      help="add self-similarity W to every node before rwi")
    _common(cmp_)

    exp = sub.add_parser("experiment", help="run a perturbation experiment")
    exps = exp.add_subparsers(dest="name", required=True)

    e = exps.add_parser("chain-single")
    e.add_argument("--n", type=int, default=10)
    _common(e)

    e = exps.add_parser("chain-block")
    e.add_argument("--n", type=int, default=10)
    e.add_argument("--m", type=int, default=2)
    e.add_argument("--decay", choices=("gauss", "inverse"), default="gauss")
    _common(e)

    e = exps.add_parser("gaussian")
    e.add_argument("--trials", type=_positive_int, default=100)
    e.add_argument("--n", type=int, default=100)
    e.add_argument("--epsilon", type=_nonneg, default=DEFAULT_EPS)
    e.add_argument("--seed", type=_seed, default=0)
    e.add_argument("--workers", type=_positive_int, default=1)
    e.add_argument("--plot-data", metavar="FILE", help="write per-trial distances as TSV")
    _common(e)

    e = exps.add_parser("grid")
    e.add_argument("--height", type=int, default=60)
    e.add_argument("--width", type=int, default=60)
    e.add_argument("--variant", choices=GRID_VARIANTS + ("all",), default="all")
    e.add_argument("--window", type=int, default=5)
    _common(e)

    e = exps.add_parser("triangle", help="search RWI triangle violations on a unit path")
    e.add_argument("--n", type=int, default=4, help="path length, at most 6")
    _common(e)

    bld = sub.add_parser("build", help="write experiment graphs to files")
    blds = bld.add_subparsers(dest="kind", required=True)
    b = blds.add_parser("chain")
    b.add_argument("--n", type=int, default=10)
    b.add_argument("--mode", choices=CHAIN_MODES, default="adjacent-unit")
    b.add_argument("--decay", choices=("gauss", "inverse"), default="gauss")
    b = blds.add_parser("gaussian")
    b.add_argument("--n", type=int, default=100)
    b.add_argument("--seed", type=_seed, default=0)
    b.add_argument("--points", metavar="FILE", help="read points instead of sampling")
    b.add_argument("--points-out", metavar="FILE")
    b.add_argument("--epsilon", type=_nonneg, default=DEFAULT_EPS)
    b = blds.add_parser("grid")
    b.add_argument("--height", type=int, default=60)
    b.add_argument("--width", type=int, default=60)
    b.add_argument("--window", type=int, default=5)
    for b in blds.choices.values():
        b.add_argument("--graph-out", metavar="FILE")
        b.add_argument("--adjacency-out", metavar="FILE")
    return parser


def _compare(args, parser) -> str:
    wanted = list(dict.fromkeys(args.index or ["vi"]))
    if "rwi" in wanted and not args.graph:
        parser.error("--index rwi needs a similarity graph: pass --graph FILE")
    if "vin" in wanted and not (args.adjacency or args.graph):
        parser.error("--index vin needs --adjacency FILE or --graph FILE with --epsilon")
    base = _BASES[args.log_base]
    a = io.read_labels(args.labels_a)
    b = io.read_labels(args.labels_b)
    if a.n != b.n:
        raise ValueError(
            f"clustering size mismatch: {args.labels_a} has {a.n} labels, {args.labels_b} has {b.n}"
        )
    sim = io.read_similarity(args.graph, n=a.n) if args.graph else None
    lines = []
    for name in wanted:
        if name == "vi":
            value = vi(a, b, base)
        elif name == "rwi":
            value = rwi(transition_model(sim, self_loop=args.self_loop), a, b, base)
        else:
            if args.adjacency:
                adj = io.read_adjacency(args.adjacency, n=a.n)
            else:
                adj = threshold_adjacency(sim, args.epsilon)
            value = vin(a, b, adj, base)
        lines.append(f"{name}\t{value:.9f}")
    return "\n".join(lines) + "\n"


def _experiment(args) -> str:
    base = _BASES[args.log_base]
    if args.name == "chain-single":
        return format_report(scenario_chain_single(args.n, base), args.output)
    if args.name == "chain-block":
        return format_report(scenario_chain_block(args.n, args.m, base, args.decay), args.output)
    if args.name == "gaussian":
        summary = scenario_gaussian(args.trials, args.n, args.epsilon, args.seed, base, args.workers)
        if args.plot_data:
            with open(args.plot_data, "w", encoding="utf-8") as fh:
                fh.write(format_plot_data(summary))
        return format_report(summary, args.output)
    if args.name == "grid":
        variants = GRID_VARIANTS if args.variant == "all" else (args.variant,)
        return "\n".join(
            format_report(scenario_grid(args.height, args.width, v, args.window, base), args.output)
            for v in variants
        )
    if args.name == "triangle":
        if not 2 <= args.n <= 6:
            raise ValueError(f"triangle search supports paths of 2 to 6 nodes, got {args.n}")
        w = rwi_triangle_search(chain_graph(args.n), base)
        return "\n".join(
            [
                "# experiment: triangle",
                f"# graph: unit-weight path on {args.n} nodes",
                f"# log_base: {args.log_base}",
                f"triples\t{w.triples}",
                f"violations\t{w.violations}",
                f"A\t{' '.join(map(str, w.a.labels.tolist()))}",
                f"B\t{' '.join(map(str, w.b.labels.tolist()))}",
                f"C\t{' '.join(map(str, w.c.labels.tolist()))}",
                f"rwi(A,B)\t{w.d_ab:.9f}",
                f"rwi(B,C)\t{w.d_bc:.9f}",
                f"rwi(A,C)\t{w.d_ac:.9f}",
                f"margin\t{w.margin:.9f}",
            ]
        ) + "\n"
    raise AssertionError(args.name)


def _build(args) -> str:
    pts = None
    if args.kind == "chain":
        sim = chain_graph(args.n, args.mode, args.decay)
        adj = chain_adjacency(args.n) if args.mode == "adjacent-unit" else threshold_adjacency(sim, 0.0)
    elif args.kind == "gaussian":
        pts = io.read_points(args.points) if args.points else sample_gaussian(args.n, args.seed)
        sim = gaussian_similarity(pts)
        adj = threshold_adjacency(sim, args.epsilon)
    else:
        sim, adj = grid_similarity(args.height, args.width, args.window)
    if pts is not None and args.points_out:
        io.write_points(args.points_out, pts)
    if args.graph_out:
        io.write_similarity(args.graph_out, sim)
    if args.adjacency_out:
        io.write_adjacency(args.adjacency_out, adj)
    return f"nodes\t{sim.n}\nsimilarity_edges\t{len(sim.edges()[0])}\nadjacency_edges\t{len(adj.edges()[0])}\n"


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "compare":
            out = _compare(args, parser)
        elif args.command == "experiment":
            out = _experiment(args)
        else:
            out = _build(args)
    except (ValueError, OSError) as exc:
        print(f"graphvi: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0
