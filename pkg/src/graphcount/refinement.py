"""Color refinement hierarchy: plain 1-WL, per-root subgraph refinement, and
pair (root, branching-neighbor) refinement, plus a graph-distinguishing harness.

Two interchangeable kernels drive everything:

* an id kernel that assigns canonical small-integer colors (sorted-signature
  first-appearance order), used for reported partitions and for exact joint
  comparisons of two graphs;
* a content-addressed hash kernel (fixed 128-bit blake2b) whose colors are
  comparable across separate runs and graphs, used for stable fingerprints.

Both iterate ``new_color = combine(old_color, sorted multiset of neighbor
colors)`` synchronously and stop as soon as one iteration no longer increases
the number of colors.  Fingerprints of genuinely different stable histograms
could in principle collide in the hash kernel; ``distinguish(..., exact=True)``
re-checks with the collision-free joint kernel.
"""

from __future__ import annotations

import hashlib
from collections import Counter
from dataclasses import dataclass
from typing import Sequence

from .extraction import (
    ExtractionPolicy,
    RootedSubgraph,
    ego,
    extract_rooted,
    iter_bag_i2,
)
from .graph import Graph


@dataclass(frozen=True)
class ColorPartition:
    """Stable coloring: canonical per-element color ids and their histogram."""

    colors: tuple[int, ...]
    histogram: tuple[tuple[int, int], ...]
    rounds_to_stability: int


@dataclass(frozen=True)
class GraphFingerprint:
    method: str
    digest: str


def _h(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=16).digest()


# ---------------------------------------------------------------------------
# Refinement kernels (joint over a list of graphs).
# ---------------------------------------------------------------------------


def _refine_ids(
    adjs: Sequence[Sequence[Sequence[int]]],
    inits: Sequence[Sequence[tuple]],
) -> tuple[list[list[int]], int]:
    """Joint refinement with canonical integer colors."""
    keys = sorted({k for row in inits for k in row})
    table = {k: i for i, k in enumerate(keys)}
    colors = [[table[k] for k in row] for row in inits]
    distinct = len(keys)
    if distinct == 0:
        return colors, 0
    rounds = 0
    while True:
        sigs = [
            [
                (cs[k], tuple(sorted(cs[l] for l in adj[k])))
                for k in range(len(adj))
            ]
            for adj, cs in zip(adjs, colors)
        ]
        uniq = sorted({s for rows in sigs for s in rows})
        table = {s: i for i, s in enumerate(uniq)}
        colors = [[table[s] for s in rows] for rows in sigs]
        rounds += 1
        if len(uniq) == distinct:
            return colors, rounds
        distinct = len(uniq)


def _refine_hash(
    adjs: Sequence[Sequence[Sequence[int]]],
    inits: Sequence[Sequence[bytes]],
) -> tuple[list[list[bytes]], int]:
    """Joint refinement with content-addressed 128-bit colors."""
    colors = [list(row) for row in inits]
    distinct = len({c for row in colors for c in row})
    if distinct == 0:
        return colors, 0
    rounds = 0
    while True:
        new = []
        for adj, cs in zip(adjs, colors):
            new.append(
                [
                    _h(cs[k] + b"|" + b"".join(sorted(cs[l] for l in adj[k])))
                    for k in range(len(adj))
                ]
            )
        rounds += 1
        nd = len({c for row in new for c in row})
        if nd == distinct:
            return new, rounds
        colors = new
        distinct = nd


def _partition_from_keys(keys: Sequence, rounds: int) -> ColorPartition:
    order = {k: i for i, k in enumerate(sorted(set(keys)))}
    colors = tuple(order[k] for k in keys)
    hist = tuple(sorted(Counter(colors).items()))
    return ColorPartition(colors, hist, rounds)


def _digest_of(keys: Sequence[bytes]) -> str:
    return _h(b"G:" + b",".join(sorted(keys))).hex()


# ---------------------------------------------------------------------------
# Initial colors.
# ---------------------------------------------------------------------------


def _graph_init_keys(g: Graph) -> list[tuple]:
    if g.node_attrs is not None:
        return [tuple(g.node_attrs[i]) for i in range(g.node_count)]
    return [(0,) for _ in range(g.node_count)]


def _subgraph_init_keys(sub: RootedSubgraph) -> list[tuple]:
    names = sub.label_names()
    return [
        tuple(sub.labels[name][k] for name in names)
        for k in range(len(sub.nodes))
    ]


def _key_bytes(key: tuple) -> bytes:
    return _h(repr(key).encode())


# ---------------------------------------------------------------------------
# 1-WL.
# ---------------------------------------------------------------------------


def wl1(g: Graph) -> ColorPartition:
    """Iterative (color, neighbor-color multiset) refinement to stability."""
    colors, rounds = _refine_ids([g.adjacency], [_graph_init_keys(g)])
    return _partition_from_keys(colors[0], rounds)


def wl1_fingerprint(g: Graph) -> GraphFingerprint:
    colors, _ = _refine_hash(
        [g.adjacency], [[_key_bytes(k) for k in _graph_init_keys(g)]]
    )
    return GraphFingerprint("wl1", _digest_of(colors[0]))


# ---------------------------------------------------------------------------
# Subgraph refinement: run refinement to stability inside each labeled rooted
# subgraph; the root's color is the stable color histogram of its subgraph.
# ---------------------------------------------------------------------------

DEFAULT_POLICY = ego(3)


def _subgraph_bag(g: Graph, policy: ExtractionPolicy, labeling: str):
    return [extract_rooted(g, i, policy, labeling) for i in range(g.node_count)]


def _hist_hash(colors: Sequence[bytes]) -> bytes:
    counts = sorted(Counter(colors).items())
    return _h(b"H:" + b",".join(c + b":%d" % n for c, n in counts))


def _node_hashes_subgraph(g: Graph, policy, labeling) -> tuple[list[bytes], int]:
    node_hashes = []
    rounds_max = 0
    for sub in _subgraph_bag(g, policy, labeling):
        inits = [[_key_bytes(k) for k in _subgraph_init_keys(sub)]]
        colors, rounds = _refine_hash([sub.adj], inits)
        rounds_max = max(rounds_max, rounds)
        node_hashes.append(_hist_hash(colors[0]))
    return node_hashes, rounds_max


def subgraph_wl(
    g: Graph,
    policy: ExtractionPolicy = DEFAULT_POLICY,
    labeling: str = "identity",
) -> ColorPartition:
    node_hashes, rounds = _node_hashes_subgraph(g, policy, labeling)
    return _partition_from_keys(node_hashes, rounds)


def subgraph_wl_fingerprint(
    g: Graph,
    policy: ExtractionPolicy = DEFAULT_POLICY,
    labeling: str = "identity",
) -> GraphFingerprint:
    node_hashes, _ = _node_hashes_subgraph(g, policy, labeling)
    return GraphFingerprint("subgraph_wl", _digest_of(node_hashes))


def subgraph_node_colors(
    g: Graph,
    policy: ExtractionPolicy = DEFAULT_POLICY,
    labeling: str = "identity",
) -> tuple[str, ...]:
    """Per-node color fingerprints comparable across graphs (hex strings)."""
    node_hashes, _ = _node_hashes_subgraph(g, policy, labeling)
    return tuple(h.hex() for h in node_hashes)


# ---------------------------------------------------------------------------
# Pair refinement: refine each (root, branching) subgraph with both
# identifiers in the initial colors, hash each stable histogram into a pair
# color, then combine each root's multiset of pair colors into its node color.
# ---------------------------------------------------------------------------


def _node_hashes_i2(g: Graph, hops: int, labeling: str) -> tuple[list[bytes], int]:
    pair_hashes: dict[int, list[bytes]] = {i: [] for i in range(g.node_count)}
    rounds_max = 0
    for sub in iter_bag_i2(g, hops, labeling):
        inits = [[_key_bytes(k) for k in _subgraph_init_keys(sub)]]
        colors, rounds = _refine_hash([sub.adj], inits)
        rounds_max = max(rounds_max, rounds)
        pair_hashes[sub.root].append(_hist_hash(colors[0]))
    node_hashes = [
        _h(b"N:" + b",".join(sorted(pair_hashes[i])))
        for i in range(g.node_count)
    ]
    return node_hashes, rounds_max


def i2_wl(g: Graph, hops: int = 1, labeling: str = "identity") -> ColorPartition:
    node_hashes, rounds = _node_hashes_i2(g, hops, labeling)
    return _partition_from_keys(node_hashes, rounds)


def i2_wl_fingerprint(
    g: Graph, hops: int = 1, labeling: str = "identity"
) -> GraphFingerprint:
    node_hashes, _ = _node_hashes_i2(g, hops, labeling)
    return GraphFingerprint("i2_wl", _digest_of(node_hashes))


def i2_node_colors(
    g: Graph, hops: int = 1, labeling: str = "identity"
) -> tuple[str, ...]:
    """Per-node color fingerprints comparable across graphs (hex strings)."""
    node_hashes, _ = _node_hashes_i2(g, hops, labeling)
    return tuple(h.hex() for h in node_hashes)


# ---------------------------------------------------------------------------
# Distinguishing harness.
# ---------------------------------------------------------------------------

METHODS = ("wl1", "subgraph_wl", "i2_wl")


def fingerprint(
    g: Graph,
    method: str,
    policy: ExtractionPolicy | None = None,
    hops: int | None = None,
    labeling: str = "identity",
) -> GraphFingerprint:
    if method == "wl1":
        return wl1_fingerprint(g)
    if method == "subgraph_wl":
        return subgraph_wl_fingerprint(g, policy or DEFAULT_POLICY, labeling)
    if method == "i2_wl":
        return i2_wl_fingerprint(g, hops if hops is not None else 1, labeling)
    raise ValueError(f"unknown refinement method {method!r}")


def _exact_compare_wl1(g1: Graph, g2: Graph) -> bool:
    colors, _ = _refine_ids(
        [g1.adjacency, g2.adjacency],
        [_graph_init_keys(g1), _graph_init_keys(g2)],
    )
    return Counter(colors[0]) != Counter(colors[1])


def _exact_node_keys_subgraph(subs_per_graph) -> list[Counter]:
    all_subs = [sub for subs in subs_per_graph for sub in subs]
    colors, _ = _refine_ids(
        [sub.adj for sub in all_subs],
        [_subgraph_init_keys(sub) for sub in all_subs],
    )
    hists = [tuple(sorted(Counter(c).items())) for c in colors]
    out = []
    pos = 0
    for subs in subs_per_graph:
        out.append(Counter(hists[pos : pos + len(subs)]))
        pos += len(subs)
    return out


def _exact_compare_subgraph(g1, g2, policy, labeling) -> bool:
    keys = _exact_node_keys_subgraph(
        [_subgraph_bag(g1, policy, labeling), _subgraph_bag(g2, policy, labeling)]
    )
    return keys[0] != keys[1]


def _exact_compare_i2(g1, g2, hops, labeling) -> bool:
    bags = [list(iter_bag_i2(g1, hops, labeling)), list(iter_bag_i2(g2, hops, labeling))]
    all_subs = [sub for bag in bags for sub in bag]
    colors, _ = _refine_ids(
        [sub.adj for sub in all_subs],
        [_subgraph_init_keys(sub) for sub in all_subs],
    )
    hists = [tuple(sorted(Counter(c).items())) for c in colors]
    node_keys = []
    pos = 0
    for g, bag in zip((g1, g2), bags):
        per_root: dict[int, list] = {i: [] for i in range(g.node_count)}
        for sub in bag:
            per_root[sub.root].append(hists[pos])
            pos += 1
        node_keys.append(
            Counter(
                tuple(sorted(per_root[i])) for i in range(g.node_count)
            )
        )
    return node_keys[0] != node_keys[1]


def distinguish(
    g1: Graph,
    g2: Graph,
    method: str = "wl1",
    policy: ExtractionPolicy | None = None,
    hops: int | None = None,
    labeling: str = "identity",
    exact: bool = False,
) -> bool:
    """True when the method's stable colorings separate the two graphs.

    The default path compares fingerprints; ``exact=True`` re-runs the
    refinement jointly on both graphs and compares full histograms, removing
    any dependence on hash-collision luck.
    """
    if not exact:
        fp1 = fingerprint(g1, method, policy, hops, labeling)
        fp2 = fingerprint(g2, method, policy, hops, labeling)
        return fp1.digest != fp2.digest
    if method == "wl1":
        return _exact_compare_wl1(g1, g2)
    if method == "subgraph_wl":
        return _exact_compare_subgraph(g1, g2, policy or DEFAULT_POLICY, labeling)
    if method == "i2_wl":
        return _exact_compare_i2(g1, g2, hops if hops is not None else 1, labeling)
    raise ValueError(f"unknown refinement method {method!r}")
