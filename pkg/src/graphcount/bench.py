"""Wall-clock scaling harness for the counting path.

Counting with bounded-radius subgraphs does constant work per root on
bounded-degree graphs, so wall time should grow linearly with the node count.
The harness times the full counting pipeline on random d-regular graphs at a
ladder of sizes and reports the per-phase breakdown plus the growth ratio
between successive sizes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .counting import count
from .generators import gen_random_regular


@dataclass(frozen=True)
class BenchRow:
    n: int
    seconds: float
    extraction: float
    message_passing: float
    readout: float
    graph_count: int
    ratio: float | None  # wall time vs the previous (half-size) run


def run_bench(
    sizes: tuple[int, ...] = (1000, 2000, 4000),
    degree: int = 4,
    kind: str = "cycle6",
    seed: int = 7,
) -> list[BenchRow]:
    rows: list[BenchRow] = []
    prev: float | None = None
    for n in sizes:
        g = gen_random_regular(n, degree, seed)
        timings: dict[str, float] = {}
        t0 = time.perf_counter()
        rep = count(kind, g, timings=timings)
        dt = time.perf_counter() - t0
        ratio = dt / prev if prev else None
        rows.append(
            BenchRow(
                n=n,
                seconds=dt,
                extraction=timings.get("extraction", 0.0),
                message_passing=timings.get("message_passing", 0.0),
                readout=timings.get("readout", 0.0),
                graph_count=rep.graph_count,
                ratio=ratio,
            )
        )
        prev = dt
    return rows
