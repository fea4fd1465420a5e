"""Explicit message-passing counting programs with exact integer readouts.

Each substructure kind maps to one fixed program (see ``engine``) plus a
readout/aggregation recipe.  Single-identifier (per-root) programs cover
2-paths, 3-paths, triangles, and 4-cycles; pair-identifier programs (root +
branching neighbor) cover 4-paths, 5-/6-cycles, and the size-4/5 graphlets.
All divisions are exact integer divisions with remainder checks, and every
kind has an independent brute-force twin in ``oracle``.

Hop requirements: each program declares the minimum subgraph radius that
makes it exact and the default it is run at (the defaults for the pair-mode
kinds mirror the radii needed to contain the substructure).  Larger radii
never change results, only cost.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from multiprocessing import get_context
from pathlib import Path
from typing import Sequence

from .engine import (
    Const,
    Layer,
    LNbr,
    LSelf,
    MPProgram,
    Msg,
    Nbr,
    Readout,
    Self,
    apply_readout,
    exact_div,
    run,
    run_program,
)
from .extraction import (
    ego,
    extract_rooted,
    identity_labeled_graph,
    with_branching,
)
from .graph import Graph, load_graph


class InsufficientHopsError(ValueError):
    """Raised when a counting program is asked to run below its minimum radius."""

    def __init__(self, kind: str, hops: int, minimum: int):
        super().__init__(f"{kind} needs subgraph radius >= {minimum}, got {hops}")
        self.kind = kind
        self.hops = hops
        self.minimum = minimum


@dataclass(frozen=True)
class PatternCounts:
    """Per-node counts of the five 6-cycle decomposition patterns."""

    p0: tuple[int, ...]
    p1: tuple[int, ...]
    p2: tuple[int, ...]
    p3: tuple[int, ...]
    p4: tuple[int, ...]


@dataclass(frozen=True)
class CountReport:
    kind: str
    node_counts: tuple[int, ...]
    graph_count: int
    patterns: PatternCounts | None = None


# ---------------------------------------------------------------------------
# Program definitions.  Masks like (1 - is_root) implement the "node k != i"
# indicators; neighborhood indicators come precomputed in the labels.
# ---------------------------------------------------------------------------

_NOT_ROOT = Const(1) - LSelf("is_root")
_NOT_BRANCH = Const(1) - LSelf("is_branch")
_MASK_IJ = _NOT_ROOT * _NOT_BRANCH
_NBR_NOT_ROOT = Const(1) - LNbr("is_root")
_NBR_NOT_BRANCH = Const(1) - LNbr("is_branch")

# Plain two-round neighbor aggregation: h_i = sum over neighbors of (deg - 1).
PROG_PATH2 = MPProgram(
    name="path2-endpoints",
    init=(),
    layers=(
        Layer(message=(Const(1),), update=(Msg(0),)),
        Layer(message=(Nbr(0) - Const(1),), update=(Msg(0),)),
    ),
)

# Per-root program: component 0 ends as the number of 2-paths root -> k.
PROG_P2 = MPProgram(
    name="two-paths-from-root",
    init=(),
    layers=(Layer(message=(LNbr("in_n_root"),), update=(_NOT_ROOT * Msg(0),)),),
)

# Per-root program: component 0 ends as the number of 3-paths root -> k.
# The correction removes walks that revisit the endpoint as their second
# node; root senders are skipped so the removal count matches exactly.
PROG_P3 = MPProgram(
    name="three-paths-from-root",
    init=(LSelf("in_n_root"),),
    layers=(
        Layer(
            message=(LNbr("in_n_root"),),
            update=(Self(0), _NOT_ROOT * Msg(0)),
        ),
        Layer(
            message=(_NBR_NOT_ROOT * (Nbr(1) - Self(0)),),
            update=(_NOT_ROOT * Msg(0),),
        ),
    ),
)

# Pair program: component 0 ends as the number of 4-paths root -> branching
# -> .. -> k (equivalently 3-paths from the branching node avoiding the root).
PROG_P4 = MPProgram(
    name="four-paths-root-branch",
    init=(_NOT_ROOT * LSelf("in_n_branch"),),
    layers=(
        Layer(message=(Nbr(0),), update=(Self(0), _MASK_IJ * Msg(0))),
        Layer(
            message=(_NBR_NOT_ROOT * _NBR_NOT_BRANCH * (Nbr(1) - Self(0)),),
            update=(_MASK_IJ * Msg(0),),
        ),
    ),
)

# Pair program for triangle-rectangles: gate the 4-path table on endpoints
# that close both the triangle (k adjacent to root) and the rectangle
# (k adjacent to branching node).
PROG_TRIANGLE_RECTANGLE = MPProgram(
    name="triangle-rectangle",
    init=PROG_P4.init,
    layers=PROG_P4.layers
    + (
        Layer(
            message=(),
            update=(Self(0) * LSelf("in_n_root") * LSelf("in_n_branch"),),
        ),
    ),
)

# Pair program: common neighbors of (root, branching) that see another common
# neighbor; summing and dividing by 6 counts 4-cliques at the root.
PROG_CLIQUE4 = MPProgram(
    name="four-cliques",
    init=(LSelf("in_n_root") * LSelf("in_n_branch"),),
    layers=(Layer(message=(Nbr(0),), update=(Self(0) * Msg(0),)),),
)

# Pair program: nodes adjacent to the branching node that see a common
# neighbor of (root, branching); counts chordal 4-cycles with the root at an
# off-chord position.
PROG_CHORDAL = MPProgram(
    name="chordal-cycles",
    init=(LSelf("in_n_root") * LSelf("in_n_branch"),),
    layers=(
        Layer(
            message=(Nbr(0),),
            update=(_NOT_ROOT * LSelf("in_n_branch") * Msg(0),),
        ),
    ),
)

# Pair program: twice the number of triangles through the root that avoid the
# branching node (each triangle is seen from both non-root corners).
PROG_TAILED = MPProgram(
    name="tailed-triangles",
    init=(LSelf("in_n_root") * _NOT_BRANCH,),
    layers=(Layer(message=(Nbr(0),), update=(Self(0) * Msg(0),)),),
)

# Merged pair program for the 6-cycle decomposition.  Final components:
#   o0 = P4(root->branch->..->k) * P2(root,k)          (pattern 0 integrand)
#   o1 = 4-paths whose second-last node neighbors root (pattern 1 integrand)
#   o2 = P4 gated on k adjacent to branching node      (pattern 3 integrand)
#   o3 = branch-neighbors times their count of common (root,branch) neighbors
#        (pattern 4 integrand; each chordal cycle is seen twice)
#   o4 = common-neighbor indicator (sums to triangles on the root edge)
#   o5, o6 = bowtie product terms combined per pair in the cycle6 runner
PROG_CYCLE6 = MPProgram(
    name="six-cycle-patterns",
    init=(
        _NOT_ROOT * LSelf("in_n_branch"),
        LSelf("in_n_root") * LSelf("in_n_branch"),
    ),
    layers=(
        Layer(
            message=(LNbr("in_n_root"), LNbr("in_n_branch"), Nbr(1)),
            update=(Self(0), Self(1), _NOT_ROOT * Msg(0), Msg(1), Msg(2)),
        ),
        Layer(
            message=(Nbr(0),),
            update=(Self(0), Self(1), Self(2), Self(3), Self(4), _MASK_IJ * Msg(0)),
        ),
        Layer(
            message=(
                _NBR_NOT_ROOT * _NBR_NOT_BRANCH * (Nbr(5) - Self(0)),
                _NBR_NOT_ROOT
                * _NBR_NOT_BRANCH
                * LNbr("in_n_root")
                * (Nbr(5) - Self(0)),
            ),
            update=(
                _MASK_IJ * Msg(0),
                _MASK_IJ * Msg(1),
                Self(2),
                Self(3),
                Self(4),
                Self(1),
            ),
        ),
        Layer(
            message=(),
            update=(
                Self(0) * Self(2),
                Self(1),
                Self(0) * LSelf("in_n_branch"),
                LSelf("in_n_branch") * _NOT_ROOT * Self(4),
                Self(5),
                LSelf("in_n_branch") * _NOT_ROOT * (Self(3) - LSelf("in_n_root")),
                Self(5) * (Self(3) - Const(1)),
            ),
        ),
    ),
)

_SUM = Readout(0)
_SUM_OVER_N_ROOT = Readout(0, weight="in_n_root")
_CYCLE6_READOUTS = tuple(Readout(c) for c in range(7))


# ---------------------------------------------------------------------------
# Kind registry.
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class KindSpec:
    mode: str  # "mpnn" | "root" | "pair"
    default_hops: int | None
    min_hops: int | None
    graph_divisor: int


KIND_SPECS: dict[str, KindSpec] = {
    "path2": KindSpec("mpnn", None, None, 2),
    "path3": KindSpec("root", 3, 3, 2),
    "path4": KindSpec("pair", 4, 4, 2),
    "cycle3": KindSpec("root", 1, 1, 3),
    "cycle4": KindSpec("root", 2, 2, 4),
    "cycle5": KindSpec("pair", 2, 2, 5),
    "cycle6": KindSpec("pair", 3, 3, 6),
    "tailed_triangle": KindSpec("pair", 2, 1, 1),
    "chordal_cycle": KindSpec("pair", 2, 2, 2),
    "clique4": KindSpec("pair", 1, 1, 4),
    "triangle_rectangle": KindSpec("pair", 2, 2, 1),
}

# Marked-endpoint path counting and the 4-path graphlet are the same count.
KIND_ALIASES = {"path4_graphlet": "path4"}

CYCLE_KINDS = ("cycle3", "cycle4", "cycle5", "cycle6")

# program, readout, and exact divisor applied to each root's accumulated value
_ROOT_RECIPES: dict[str, tuple[MPProgram, Readout, int]] = {
    "cycle3": (PROG_P2, _SUM_OVER_N_ROOT, 2),
    "cycle4": (PROG_P3, _SUM_OVER_N_ROOT, 2),
    "path3": (PROG_P3, _SUM, 1),
}
_PAIR_RECIPES: dict[str, tuple[MPProgram, Readout, int]] = {
    "cycle5": (PROG_P4, _SUM_OVER_N_ROOT, 2),
    "path4": (PROG_P4, _SUM, 1),
    "clique4": (PROG_CLIQUE4, _SUM, 6),
    "chordal_cycle": (PROG_CHORDAL, _SUM, 2),
    "tailed_triangle": (PROG_TAILED, _SUM, 2),
    "triangle_rectangle": (PROG_TRIANGLE_RECTANGLE, _SUM, 2),
}


def resolve_kind(kind: str) -> str:
    kind = KIND_ALIASES.get(kind, kind)
    if kind not in KIND_SPECS and _parse_walk_kind(kind) is None:
        raise ValueError(f"unknown substructure kind {kind!r}")
    return kind


def _parse_walk_kind(kind: str) -> int | None:
    if kind.startswith("walk") and kind[4:].isdigit():
        length = int(kind[4:])
        if 1 <= length <= 8:
            return length
    return None


def _resolve_hops(kind: str, hops: int | None) -> int:
    spec = KIND_SPECS[kind]
    k = spec.default_hops if hops is None else hops
    if k < spec.min_hops:
        raise InsufficientHopsError(kind, k, spec.min_hops)
    return k


# ---------------------------------------------------------------------------
# Per-root evaluation.  One root is one unit of work, so the bag can be
# evaluated in chunks (and, with threads > 1, in worker processes) while
# staying deterministic: results are merged in root order.
# ---------------------------------------------------------------------------


class _Phases:
    """Accumulates per-phase wall time; a no-op when disabled."""

    __slots__ = ("extraction", "message_passing", "readout", "enabled")

    def __init__(self, enabled: bool):
        self.enabled = enabled
        self.extraction = self.message_passing = self.readout = 0.0


def _root_value(kind: str, g: Graph, hops: int, i: int, ph: _Phases) -> int | tuple:
    if kind == "cycle6":
        return _root_cycle6(g, hops, i, ph)
    t0 = time.perf_counter() if ph.enabled else 0.0
    if kind in _ROOT_RECIPES:
        prog, readout, div = _ROOT_RECIPES[kind]
        sub = extract_rooted(g, i, ego(hops))
        subs = [sub]
    else:
        prog, readout, div = _PAIR_RECIPES[kind]
        base = extract_rooted(g, i, ego(hops))
        subs = [with_branching(g, base, j) for j in g.adjacency[i]]
    if ph.enabled:
        t1 = time.perf_counter()
    all_states = [run_program(sub, prog) for sub in subs]
    if ph.enabled:
        t2 = time.perf_counter()
    acc = 0
    for sub, states in zip(subs, all_states):
        acc += apply_readout(sub, states, readout)
    value = exact_div(acc, div)
    if ph.enabled:
        t3 = time.perf_counter()
        ph.extraction += t1 - t0
        ph.message_passing += t2 - t1
        ph.readout += t3 - t2
    return value


def _root_cycle6(g: Graph, hops: int, i: int, ph: _Phases) -> tuple:
    """Return (c6, p0, p1, p2, p3, p4) for one root."""
    t0 = time.perf_counter() if ph.enabled else 0.0
    base = extract_rooted(g, i, ego(hops))
    subs = [with_branching(g, base, j) for j in g.adjacency[i]]
    if ph.enabled:
        t1 = time.perf_counter()
    all_states = [run_program(sub, PROG_CYCLE6) for sub in subs]
    if ph.enabled:
        t2 = time.perf_counter()
    a0 = a1 = a3 = a4 = bowtie = 0
    for sub, states in zip(subs, all_states):
        n0, n1, n3, n4, cn, xv, yv = (
            apply_readout(sub, states, r) for r in _CYCLE6_READOUTS
        )
        a0 += n0
        a1 += n1
        a3 += n3
        a4 += n4
        bowtie += cn * xv - yv
    p4 = exact_div(a4, 2)
    p2 = bowtie - 2 * p4
    closed = a0 - a1 - p2 - a3
    if closed < 0:
        raise ArithmeticError(f"negative 6-cycle pattern balance at node {i}: {closed}")
    value = (exact_div(closed, 2), a0, a1, p2, a3, p4)
    if ph.enabled:
        t3 = time.perf_counter()
        ph.extraction += t1 - t0
        ph.message_passing += t2 - t1
        ph.readout += t3 - t2
    return value


def _chunk_worker(args):
    kind, g, hops, roots = args
    ph = _Phases(False)
    return [_root_value(kind, g, hops, i, ph) for i in roots]


def _map_roots(
    kind: str,
    g: Graph,
    hops: int,
    threads: int,
    timings: dict[str, float] | None,
) -> list:
    roots = list(range(g.node_count))
    if timings is not None:
        ph = _Phases(True)
        values = [_root_value(kind, g, hops, i, ph) for i in roots]
        timings["extraction"] = timings.get("extraction", 0.0) + ph.extraction
        timings["message_passing"] = (
            timings.get("message_passing", 0.0) + ph.message_passing
        )
        timings["readout"] = timings.get("readout", 0.0) + ph.readout
        return values
    if threads <= 1 or len(roots) < 64:
        return _chunk_worker((kind, g, hops, roots))
    size = max(16, len(roots) // (threads * 8))
    chunks = [roots[i : i + size] for i in range(0, len(roots), size)]
    with get_context("fork").Pool(threads) as pool:
        parts = pool.map(_chunk_worker, [(kind, g, hops, c) for c in chunks])
    return [v for part in parts for v in part]


# ---------------------------------------------------------------------------
# Public counting operations.
# ---------------------------------------------------------------------------


def count(
    kind: str,
    g: Graph,
    hops: int | None = None,
    threads: int = 1,
    timings: dict[str, float] | None = None,
) -> CountReport:
    """Count one substructure kind at node and graph level.

    ``timings`` (optional dict) accumulates an extraction / message passing /
    readout wall-time breakdown; when supplied the evaluation runs serially.
    """
    kind = resolve_kind(kind)
    walk_len = _parse_walk_kind(kind)
    if walk_len is not None:
        per_node = closed_walk_counts(g, walk_len)
        return CountReport(kind, per_node, sum(per_node))
    spec = KIND_SPECS[kind]
    if spec.mode == "mpnn":
        return count_path2_node(g)
    k = _resolve_hops(kind, hops)
    values = _map_roots(kind, g, k, threads, timings)
    if kind == "cycle6":
        per_node = tuple(v[0] for v in values)
        patterns = PatternCounts(
            p0=tuple(v[1] for v in values),
            p1=tuple(v[2] for v in values),
            p2=tuple(v[3] for v in values),
            p3=tuple(v[4] for v in values),
            p4=tuple(v[5] for v in values),
        )
        return CountReport("cycle6", per_node, exact_div(sum(per_node), 6), patterns)
    per_node = tuple(values)
    return CountReport(kind, per_node, exact_div(sum(per_node), spec.graph_divisor))


def count_path2_node(g: Graph) -> CountReport:
    states = run(PROG_PATH2, g.adjacency, {})
    per_node = tuple(h[0] for h in states)
    return CountReport("path2", per_node, exact_div(sum(per_node), 2))


def count_path3_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("path3", g, hops, threads)


def count_cycle3_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("cycle3", g, hops, threads)


def count_cycle4_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("cycle4", g, hops, threads)


def count_cycle5_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("cycle5", g, hops, threads)


def count_cycle6_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("cycle6", g, hops, threads)


def count_path4_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("path4", g, hops, threads)


def count_clique4_node(g: Graph, hops: int | None = None, threads: int = 1) -> CountReport:
    return count("clique4", g, hops, threads)


def count_chordal_cycle_node(
    g: Graph, hops: int | None = None, threads: int = 1
) -> CountReport:
    return count("chordal_cycle", g, hops, threads)


def count_tailed_triangle_node(
    g: Graph, hops: int | None = None, threads: int = 1
) -> CountReport:
    return count("tailed_triangle", g, hops, threads)


def count_triangle_rectangle_node(
    g: Graph, hops: int | None = None, threads: int = 1
) -> CountReport:
    return count("triangle_rectangle", g, hops, threads)


def count_path4_edge(g: Graph, hops: int = 3) -> dict[tuple[int, int], dict[int, int]]:
    """Per ordered adjacent pair (i, j): 4-path counts i->j->..->k, keyed by k.

    With radius 3 the table is exact for every endpoint k inside the root's
    subgraph (which covers all k within 3 hops); radius >= 4 makes it exact
    for all endpoints.
    """
    if hops < 3:
        raise InsufficientHopsError("path4_edge", hops, 3)
    table: dict[tuple[int, int], dict[int, int]] = {}
    for i in range(g.node_count):
        base = extract_rooted(g, i, ego(hops))
        for j in g.adjacency[i]:
            sub = with_branching(g, base, j)
            states = run_program(sub, PROG_P4)
            table[(i, j)] = {
                sub.nodes[k]: h[0] for k, h in enumerate(states) if h[0]
            }
    return table


def count_walks(g: Graph, length: int, i: int, j: int) -> int:
    """Number of length-L walks from i to j via synchronous propagation."""
    if length < 1:
        raise ValueError("walk length must be >= 1")
    layer = Layer(message=(Nbr(0),), update=(Msg(0),))
    prog = MPProgram(
        name=f"walks-{length}",
        init=(LSelf("is_root"),),
        layers=(layer,) * length,
    )
    sub = identity_labeled_graph(g, i)
    states = run_program(sub, prog)
    return states[j][0]


def closed_walk_counts(g: Graph, length: int) -> tuple[int, ...]:
    return tuple(count_walks(g, length, i, i) for i in range(g.node_count))


@dataclass(frozen=True)
class CorpusStats:
    name: str
    graphs: int
    avg_cycle_counts: tuple[float, float, float, float]
    errors: tuple[str, ...]


def corpus_cycle_stats(
    corpora: Sequence[tuple[str, Sequence[str | Path]]],
    fmt: str = "edgelist",
    threads: int = 1,
) -> list[CorpusStats]:
    """Average per-graph 3/4/5/6-cycle counts for each corpus of graph files.

    Files that fail to parse are reported per corpus and skipped; the
    computation continues.
    """
    out = []
    for name, paths in corpora:
        totals = [0, 0, 0, 0]
        n_ok = 0
        errors = []
        for path in paths:
            try:
                g = load_graph(path, fmt)
            except Exception as exc:
                errors.append(f"{path}: {exc}")
                continue
            for pos, kind in enumerate(CYCLE_KINDS):
                totals[pos] += count(kind, g, threads=threads).graph_count
            n_ok += 1
        avgs = tuple(t / n_ok if n_ok else 0.0 for t in totals)
        out.append(CorpusStats(name, n_ok, avgs, tuple(errors)))
    return out
