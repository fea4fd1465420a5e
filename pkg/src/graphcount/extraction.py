"""Rooted-subgraph extraction: ego-networks, node deletion, and labelings.

A rooted subgraph keeps its parent-graph node ids plus a dense local
reindexing; message-passing programs run on local indices and results are
reported in parent ids.  Identifier indicators for the root (and branching
node, in pair mode) and for their neighborhoods are precomputed into the
label vectors, because the hand-built counting programs consume them in
their very first layer.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import engine
from .graph import Graph

LABELINGS = ("identity", "spd")


@dataclass(frozen=True)
class ExtractionPolicy:
    """Node-based extraction strategy: "ego" (with hop count) or "node_deletion"."""

    kind: str
    hops: int | None = None

    def __post_init__(self) -> None:
        if self.kind == "ego":
            if self.hops is None or self.hops < 1:
                raise ValueError("ego extraction needs hops >= 1")
        elif self.kind == "node_deletion":
            if self.hops is not None:
                raise ValueError("node_deletion takes no hop count")
        else:
            raise ValueError(f"unknown extraction policy {self.kind!r}")


def ego(hops: int) -> ExtractionPolicy:
    return ExtractionPolicy("ego", hops)


def node_deletion() -> ExtractionPolicy:
    return ExtractionPolicy("node_deletion")


@dataclass(frozen=True)
class RootedSubgraph:
    """An extracted subgraph tied to a root (and optionally a branching node).

    ``nodes`` are parent ids in ascending order, ``adj`` is the local
    adjacency over positions in ``nodes``, and ``labels`` maps label names to
    per-local-node integer vectors.
    """

    root: int
    branching: int | None
    nodes: tuple[int, ...]
    adj: tuple[tuple[int, ...], ...]
    labels: dict[str, tuple[int, ...]]
    edge_attrs: tuple[tuple[int, ...], ...] | None = None

    @property
    def local_index(self) -> dict[int, int]:
        return {p: i for i, p in enumerate(self.nodes)}

    def label_names(self) -> tuple[str, ...]:
        return tuple(sorted(self.labels))


def _bfs_limited(g: Graph, source: int, hops: int | None) -> dict[int, int]:
    """Distances from source up to ``hops`` (all reachable when hops is None)."""
    dist = {source: 0}
    frontier = [source]
    d = 0
    while frontier and (hops is None or d < hops):
        d += 1
        nxt = []
        for u in frontier:
            for v in g.adjacency[u]:
                if v not in dist:
                    dist[v] = d
                    nxt.append(v)
        frontier = nxt
    return dist


def _induced_adj(g: Graph, nodes: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    index = {p: i for i, p in enumerate(nodes)}
    rows = []
    for p in nodes:
        rows.append(tuple(index[q] for q in g.adjacency[p] if q in index))
    return tuple(rows)


def _edge_attr_rows(
    g: Graph, nodes: tuple[int, ...]
) -> tuple[tuple[int, ...], ...] | None:
    if g.edge_attrs is None:
        return None
    lookup = {(u, v): val for u, v, val in g.edge_attrs}
    lookup.update({(v, u): val for u, v, val in g.edge_attrs})
    index = {p: i for i, p in enumerate(nodes)}
    return tuple(
        tuple(lookup.get((p, q), 0) for q in g.adjacency[p] if q in index)
        for p in nodes
    )


def _base_labels(
    g: Graph, nodes: tuple[int, ...], root: int, labeling: str
) -> dict[str, tuple[int, ...]]:
    root_nbrs = g.neighbor_set(root)
    labels = {
        "is_root": tuple(1 if p == root else 0 for p in nodes),
        "in_n_root": tuple(1 if p in root_nbrs else 0 for p in nodes),
    }
    if labeling == "spd":
        dist = _bfs_limited(g, root, None)
        labels["spd_root"] = tuple(dist.get(p, -1) for p in nodes)
    elif labeling != "identity":
        raise ValueError(f"unknown labeling {labeling!r}")
    return labels


def extract_rooted(
    g: Graph,
    root: int,
    policy: ExtractionPolicy,
    labeling: str = "identity",
) -> RootedSubgraph:
    """Extract one labeled rooted subgraph.

    node_deletion drops the root and its incident edges but keeps the root's
    identity recorded (its neighborhood indicator still marks the ex-neighbors,
    and ``root`` itself is stored on the result).
    """
    g._check_node(root)
    if policy.kind == "ego":
        nodes = tuple(sorted(_bfs_limited(g, root, policy.hops)))
    else:
        nodes = tuple(p for p in range(g.node_count) if p != root)
    return RootedSubgraph(
        root=root,
        branching=None,
        nodes=nodes,
        adj=_induced_adj(g, nodes),
        labels=_base_labels(g, nodes, root, labeling),
        edge_attrs=_edge_attr_rows(g, nodes),
    )


def with_branching(g: Graph, sub: RootedSubgraph, branching: int) -> RootedSubgraph:
    """Copy a rooted subgraph, additionally marking a branching neighbor."""
    if branching not in g.neighbor_set(sub.root):
        raise ValueError(
            f"branching node {branching} is not a neighbor of root {sub.root}"
        )
    br_nbrs = g.neighbor_set(branching)
    labels = dict(sub.labels)
    labels["is_branch"] = tuple(1 if p == branching else 0 for p in sub.nodes)
    labels["in_n_branch"] = tuple(1 if p in br_nbrs else 0 for p in sub.nodes)
    if "spd_root" in labels:
        dist = _bfs_limited(g, branching, None)
        labels["spd_branch"] = tuple(dist.get(p, -1) for p in sub.nodes)
    return RootedSubgraph(
        root=sub.root,
        branching=branching,
        nodes=sub.nodes,
        adj=sub.adj,
        labels=labels,
        edge_attrs=sub.edge_attrs,
    )


def extract_bag_subgraph_mpnn(
    g: Graph, policy: ExtractionPolicy, labeling: str = "identity"
) -> list[RootedSubgraph]:
    """One rooted subgraph per node, ordered by root."""
    return [extract_rooted(g, i, policy, labeling) for i in range(g.node_count)]


def iter_bag_i2(
    g: Graph, hops: int, labeling: str = "identity"
) -> Iterator[RootedSubgraph]:
    """Stream the pair bag: one subgraph per ordered adjacent pair (root, branching).

    The pair subgraph's node set is the root's ego-network; only the labels
    change across branching choices, so the ego extraction is shared.
    """
    policy = ego(hops)
    for i in range(g.node_count):
        if not g.adjacency[i]:
            continue
        base = extract_rooted(g, i, policy, labeling)
        for j in g.adjacency[i]:
            yield with_branching(g, base, j)


def extract_bag_i2(
    g: Graph, hops: int, labeling: str = "identity"
) -> list[RootedSubgraph]:
    """Materialized pair bag; cardinality is 2|E| (handshake)."""
    return list(iter_bag_i2(g, hops, labeling))


def identity_labeled_graph(g: Graph, root: int) -> RootedSubgraph:
    """The whole graph as a rooted subgraph with only the root identifier.

    This is the reference strategy that subsumes the others: masking programs
    over it can reproduce ego-network membership and hop distances (see
    ego_mask_program / spd_label_program).
    """
    g._check_node(root)
    nodes = tuple(range(g.node_count))
    return RootedSubgraph(
        root=root,
        branching=None,
        nodes=nodes,
        adj=g.adjacency,
        labels=_base_labels(g, nodes, root, "identity"),
        edge_attrs=_edge_attr_rows(g, nodes),
    )


def ego_mask_program(hops: int) -> engine.MPProgram:
    """K rounds of reachability propagation from the root identifier.

    The final state component is 1 exactly on nodes within ``hops`` of the
    root, i.e. the ego-network membership mask.
    """
    layer = engine.Layer(
        message=(engine.Nbr(0),),
        update=(engine.IsPos(engine.Self(0) + engine.Msg(0)),),
    )
    return engine.MPProgram(
        name=f"ego-mask-{hops}",
        init=(engine.LSelf("is_root"),),
        layers=(layer,) * hops,
    )


def spd_label_program(hops: int) -> engine.MPProgram:
    """K rounds of (visited, distance) propagation from the root identifier.

    After round t, nodes first reached at round t hold distance t; the final
    states equal the hop distances of all nodes within ``hops`` of the root
    (component 1), with component 0 as the reached mask.
    """
    layers = []
    for t in range(1, hops + 1):
        visited = engine.IsPos(engine.Self(0) + engine.Msg(0))
        newly = engine.IsZero(engine.Self(0)) * engine.IsPos(engine.Msg(0))
        dist = engine.Self(1) + engine.Const(t) * newly
        layers.append(engine.Layer(message=(engine.Nbr(0),), update=(visited, dist)))
    return engine.MPProgram(
        name=f"spd-labels-{hops}",
        init=(engine.LSelf("is_root"), engine.Const(0)),
        layers=tuple(layers),
    )
