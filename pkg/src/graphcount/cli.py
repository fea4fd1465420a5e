"""Command-line front end: count, oracle, distinguish, gen, stats, bench.

Exit code contract (for CI scripting):
  0  success
  2  input error (parse/validation/usage)
  3  unmet precondition (insufficient subgraph radius, enumeration budget)
  4  arithmetic integrity failure (a remainder/nonnegativity check fired;
     states are arbitrary-precision integers, so true overflow cannot occur
     and this code is effectively reserved)

The ``count`` and ``oracle`` subcommands emit byte-identical CSV schemas
(report schema v1, see README) so their outputs can be diffed directly.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from pathlib import Path

from . import bench as bench_mod
from . import counting, generators, oracle, refinement
from .counting import InsufficientHopsError
from .extraction import ego, node_deletion
from .graph import (
    Graph,
    GraphFormatError,
    GraphValidationError,
    format_edgelist,
    iter_graph6,
    load_graph,
)

REPORT_SCHEMA_VERSION = 1

_COUNT_KINDS = sorted(counting.KIND_SPECS) + sorted(counting.KIND_ALIASES) + [
    f"walk{n}" for n in range(2, 9)
]
_ORACLE_KINDS = sorted(set(_COUNT_KINDS) | {"cycle7", "cycle8"})


def _cpu_default() -> int:
    return os.cpu_count() or 1


def _write_report(
    out: str | None,
    level: str,
    per_node: tuple[int, ...],
    graph_count: int,
    patterns=None,
) -> None:
    handle = open(out, "w", newline="") if out else sys.stdout
    try:
        writer = csv.writer(handle, lineterminator="\n")
        if level == "graph":
            writer.writerow(["count"])
            writer.writerow([graph_count])
            return
        if patterns is not None:
            writer.writerow(
                ["node", "count", "pattern0", "pattern1", "pattern2", "pattern3", "pattern4"]
            )
            for i, c in enumerate(per_node):
                writer.writerow(
                    [i, c, patterns.p0[i], patterns.p1[i], patterns.p2[i],
                     patterns.p3[i], patterns.p4[i]]
                )
        else:
            writer.writerow(["node", "count"])
            for i, c in enumerate(per_node):
                writer.writerow([i, c])
    finally:
        if out:
            handle.close()


def _cmd_count(args) -> int:
    g = load_graph(args.input, args.format)
    rep = counting.count(args.substructure, g, hops=args.hops, threads=args.threads)
    patterns = rep.patterns if (args.verbose and rep.patterns) else None
    _write_report(args.out, args.level, rep.node_counts, rep.graph_count, patterns)
    return 0


def _oracle_report(kind: str, g: Graph, budget: int):
    # the oracle covers two cycle lengths beyond the counting programs, so
    # kinds dispatch by prefix here instead of through the program registry
    kind = counting.KIND_ALIASES.get(kind, kind)
    walk_len = counting._parse_walk_kind(kind)
    if walk_len is not None:
        per_node = tuple(
            oracle.oracle_walks(g, walk_len, i, i) for i in range(g.node_count)
        )
        return per_node, sum(per_node), None
    if kind.startswith("cycle"):
        res = oracle.oracle_cycles(g, int(kind[5:]), budget)
        patterns = (
            oracle.oracle_cycle6_patterns(g, budget) if kind == "cycle6" else None
        )
        return res.per_node, res.graph_count, patterns
    if kind.startswith("path"):
        res = oracle.oracle_paths(g, int(kind[4:]), budget)
        return res.starts_at, res.graph_count, None
    res = oracle.oracle_graphlets(g, kind)
    return res.per_node, res.graph_count, None


def _cmd_oracle(args) -> int:
    g = load_graph(args.input, args.format)
    per_node, graph_count, patterns = _oracle_report(args.substructure, g, args.budget)
    if not args.verbose:
        patterns = None
    _write_report(args.out, args.level, per_node, graph_count, patterns)
    return 0


def _refinement_kwargs(args) -> dict:
    kw = {"labeling": args.labeling, "exact": args.exact_compare}
    if args.method == "subgraph_wl":
        if args.policy == "node_deletion":
            kw["policy"] = node_deletion()
        else:
            kw["policy"] = ego(args.hops if args.hops is not None else 3)
    elif args.method == "i2_wl":
        kw["hops"] = args.hops if args.hops is not None else 1
    return kw


def _verdict(d: bool) -> str:
    return "distinguished" if d else "not_distinguished"


def _cmd_distinguish(args) -> int:
    kw = _refinement_kwargs(args)
    if args.corpus:
        return _distinguish_corpus(args, kw)
    if len(args.graphs) != 2:
        raise GraphFormatError("distinguish needs exactly two graph files")
    g1 = load_graph(args.graphs[0], args.format)
    g2 = load_graph(args.graphs[1], args.format)
    print(_verdict(refinement.distinguish(g1, g2, args.method, **kw)))
    return 0


def _distinguish_corpus(args, kw) -> int:
    """Corpus mode over graph6 files: two files pair up line by line, a
    single file is compared all-against-all."""
    files = args.graphs
    if len(files) == 2:
        left = list(iter_graph6(files[0]))
        right = list(iter_graph6(files[1]))
        if len(left) != len(right):
            raise GraphFormatError(
                f"corpus files hold {len(left)} vs {len(right)} graphs"
            )
        pairs = [((i, i), (left[i], right[i])) for i in range(len(left))]
    elif len(files) == 1:
        graphs = list(iter_graph6(files[0]))
        pairs = [
            ((i, j), (graphs[i], graphs[j]))
            for i in range(len(graphs))
            for j in range(i + 1, len(graphs))
        ]
    else:
        raise GraphFormatError("corpus mode takes one or two graph6 files")
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["pair", "verdict"])
    n_dist = 0
    for (i, j), (g1, g2) in pairs:
        d = refinement.distinguish(g1, g2, args.method, **kw)
        n_dist += d
        writer.writerow([f"{i}-{j}", _verdict(d)])
    print(f"distinguished {n_dist}/{len(pairs)}", file=sys.stderr)
    return 0


def _cmd_gen(args) -> int:
    name = args.graph
    if name == "cycle":
        g = generators.gen_cycle(args.L)
    elif name == "path":
        g = generators.gen_path(args.n)
    elif name == "star":
        g = generators.gen_star(args.n)
    elif name == "complete":
        g = generators.gen_complete(args.n)
    elif name == "petersen":
        g = generators.gen_petersen()
    elif name == "rook":
        g = generators.gen_rook4x4()
    elif name == "shrikhande":
        g = generators.gen_shrikhande()
    elif name == "cycle-pair":
        two, one = generators.gen_cycle_pair(args.L)
        g = two if args.variant == "disjoint" else one
    elif name == "coned":
        joined, disjoint = generators.gen_coned_cycles(args.L)
        g = joined if args.variant == "joined" else disjoint
    elif name == "random":
        g = generators.gen_random(args.n, args.p, args.seed)
    elif name == "random-regular":
        g = generators.gen_random_regular(args.n, args.d, args.seed)
    else:  # pragma: no cover - argparse choices guard this
        raise GraphFormatError(f"unknown generator {name!r}")
    text = format_edgelist(g)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_stats(args) -> int:
    corpora = []
    for item in args.inputs:
        p = Path(item)
        if p.is_dir():
            files = sorted(q for q in p.iterdir() if q.is_file())
            if files:
                corpora.append((p.name, files))
        else:
            corpora.append((p.name, [p]))
    results = counting.corpus_cycle_stats(corpora, fmt=args.format, threads=args.threads)
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["corpus", "graphs", "avg_cycle3", "avg_cycle4", "avg_cycle5", "avg_cycle6"]
    )
    for row in results:
        for err in row.errors:
            print(f"error: {err}", file=sys.stderr)
        writer.writerow(
            [row.name, row.graphs]
            + [f"{v:.6g}" for v in row.avg_cycle_counts]
        )
    return 0


def _cmd_bench(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(",") if s != "")
    rows = bench_mod.run_bench(
        sizes=sizes, degree=args.degree, kind=args.substructure, seed=args.seed
    )
    handle = open(args.out, "w", newline="") if args.out else sys.stdout
    try:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(
            ["n", "seconds", "extraction", "message_passing", "readout",
             "graph_count", "ratio_vs_prev"]
        )
        for r in rows:
            writer.writerow(
                [r.n, f"{r.seconds:.4f}", f"{r.extraction:.4f}",
                 f"{r.message_passing:.4f}", f"{r.readout:.4f}",
                 r.graph_count, "" if r.ratio is None else f"{r.ratio:.3f}"]
            )
    finally:
        if args.out:
            handle.close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphcount",
        description="Exact substructure counting, brute-force oracles, and "
        "color-refinement graph tests.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_io(p):
        p.add_argument("--input", required=True, help="graph file")
        p.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
        p.add_argument("--level", choices=("node", "graph"), default="node")
        p.add_argument("--verbose", action="store_true",
                       help="include 6-cycle pattern columns")
        p.add_argument("--out", help="write CSV here instead of stdout")

    p_count = sub.add_parser("count", help="run a message-passing counting program")
    add_io(p_count)
    p_count.add_argument("--substructure", required=True, choices=_COUNT_KINDS)
    p_count.add_argument("--hops", type=int, default=None,
                         help="subgraph radius (default per substructure)")
    p_count.add_argument("--threads", type=int, default=_cpu_default())
    p_count.set_defaults(func=_cmd_count)

    p_oracle = sub.add_parser("oracle", help="run the brute-force enumeration oracle")
    add_io(p_oracle)
    p_oracle.add_argument("--substructure", required=True, choices=_ORACLE_KINDS)
    p_oracle.add_argument("--budget", type=int, default=oracle.DEFAULT_BUDGET,
                          help="enumeration step budget")
    p_oracle.set_defaults(func=_cmd_oracle)

    p_dist = sub.add_parser("distinguish", help="compare two graphs by refinement digests")
    p_dist.add_argument("graphs", nargs="+", help="two graph files, or corpus file(s)")
    p_dist.add_argument("--method", choices=refinement.METHODS, default="wl1")
    p_dist.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p_dist.add_argument("--policy", choices=("ego", "node_deletion"), default="ego")
    p_dist.add_argument("--hops", type=int, default=None,
                        help="subgraph radius (default: 3 for subgraph_wl, 1 for i2_wl)")
    p_dist.add_argument("--labeling", choices=("identity", "spd"), default="identity")
    p_dist.add_argument("--exact-compare", action="store_true",
                        help="joint refinement instead of digest comparison")
    p_dist.add_argument("--corpus", action="store_true",
                        help="treat inputs as graph6 corpora and compare pairs")
    p_dist.set_defaults(func=_cmd_distinguish)

    p_gen = sub.add_parser("gen", help="generate a named graph as an edge list")
    p_gen.add_argument(
        "graph",
        choices=("cycle", "cycle-pair", "coned", "rook", "shrikhande", "petersen",
                 "complete", "path", "star", "random", "random-regular"),
    )
    p_gen.add_argument("--L", type=int, default=3, help="cycle length parameter")
    p_gen.add_argument("--n", type=int, default=8, help="node count")
    p_gen.add_argument("--p", type=float, default=0.3, help="edge probability")
    p_gen.add_argument("--d", type=int, default=4, help="regular degree")
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--variant", choices=("joined", "disjoint"), default="joined",
                       help="cycle-pair/coned: one 2L-cycle vs two L-cycles")
    p_gen.add_argument("--out", help="output file (default stdout)")
    p_gen.set_defaults(func=_cmd_gen)

    p_stats = sub.add_parser("stats", help="corpus cycle statistics")
    p_stats.add_argument("inputs", nargs="+",
                         help="directories (one corpus each) or single files")
    p_stats.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    p_stats.add_argument("--threads", type=int, default=_cpu_default())
    p_stats.set_defaults(func=_cmd_stats)

    p_bench = sub.add_parser("bench", help="near-linear scaling benchmark")
    p_bench.add_argument("--sizes", default="1000,2000,4000")
    p_bench.add_argument("--degree", type=int, default=4)
    p_bench.add_argument("--substructure", choices=_COUNT_KINDS, default="cycle6")
    p_bench.add_argument("--seed", type=int, default=7)
    p_bench.add_argument("--out", help="write CSV here instead of stdout")
    p_bench.set_defaults(func=_cmd_bench)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphFormatError, GraphValidationError, FileNotFoundError, ValueError) as exc:
        if isinstance(exc, InsufficientHopsError):
            print(f"error: {exc}", file=sys.stderr)
            return 3
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except oracle.OracleBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except ArithmeticError as exc:
        print(f"error: arithmetic integrity check failed: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    raise SystemExit(main())
