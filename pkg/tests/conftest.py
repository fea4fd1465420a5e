"""Shared test helpers: a graph6 encoder (write-side oracle for the read-only
parser) and deterministic random corpora."""

from __future__ import annotations

import random
from itertools import combinations

import pytest

from graphcount.generators import gen_random
from graphcount.graph import Graph, from_edges


def to_graph6(g: Graph) -> str:
    """Independent graph6 encoder (n <= 62) used to cross-check the parser."""
    n = g.node_count
    assert n <= 62
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return "".join(chars)


def small_random_graphs(count: int = 10, max_n: int = 14) -> list[Graph]:
    graphs = []
    for seed in range(count):
        rng = random.Random(1000 + seed)
        n = rng.randint(4, max_n)
        p = rng.choice((0.2, 0.35, 0.5))
        graphs.append(gen_random(n, p, seed))
    return graphs


def random_permutation(n: int, seed: int) -> list[int]:
    perm = list(range(n))
    random.Random(seed).shuffle(perm)
    return perm


@pytest.fixture(scope="session")
def unit_corpus() -> list[Graph]:
    """Small deterministic mixed corpus for module-level equivalence tests."""
    graphs = []
    for n, p in ((8, 0.2), (8, 0.4), (12, 0.2), (12, 0.4)):
        for seed in range(4):
            graphs.append(gen_random(n, p, seed))
    return graphs


def all_graphs_up_to(n_max: int):
    """Every labeled simple graph on up to n_max nodes (small n only)."""
    for n in range(n_max + 1):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            edges = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
            yield from_edges(n, edges)
