"""Shared test utilities: seeded random graphs and small named fixtures."""

from __future__ import annotations

import random
from itertools import combinations

from histlab.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


def random_connected(rng: random.Random, n: int, extra: int) -> Graph:
    """Random spanning tree plus ``extra`` further random edges (fewer if the graph fills up)."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    missing = [e for e in combinations(range(n), 2) if e not in edges]
    rng.shuffle(missing)
    edges |= set(missing[:extra])
    return Graph.from_edges(n, sorted(edges))


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def hist_critical_order7() -> tuple[Graph, Graph]:
    """The two HIST-critical graphs of order 7 (the second adds one edge to the first)."""
    base = [(0, 3), (0, 4), (0, 5), (1, 3), (1, 5), (1, 6), (2, 4), (2, 5), (2, 6), (3, 6), (4, 6)]
    return Graph.from_edges(7, base), Graph.from_edges(7, base + [(3, 4)])
