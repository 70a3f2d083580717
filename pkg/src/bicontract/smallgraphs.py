"""Exhaustive and random small-graph generation for cross-validation suites."""

from __future__ import annotations

import random
from itertools import combinations
from typing import Iterator

from . import graphs
from .graphs import Graph


def labeled_graphs(n: int) -> Iterator[Graph]:
    """Every labeled simple graph on vertices 0..n-1, by edge-mask order."""
    pairs = list(combinations(range(n), 2))
    for emask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if emask >> i & 1]
        yield Graph.from_edges(n, edges)


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    for g in labeled_graphs(n):
        if graphs.is_connected(g):
            yield g


def random_connected_graph(n: int, rng: random.Random, extra_p: float = 0.3) -> Graph:
    """Random spanning tree plus each remaining pair independently with extra_p."""
    edges = []
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        edges.append((order[i], order[rng.randrange(i)]))
    present = {tuple(sorted(e)) for e in edges}
    for u, v in combinations(range(n), 2):
        if (u, v) not in present and rng.random() < extra_p:
            edges.append((u, v))
    return Graph.from_edges(n, edges)
