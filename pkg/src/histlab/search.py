"""HIST existence, exact counting and witness extraction.

All entry points reduce to one compiled branch-and-bound (``_kernel.search``)
over spanning trees, or over two-component spanning forests separating two
terminals.  Counts are plain Python ints.
"""

from __future__ import annotations

from typing import Iterable, Optional

import numpy as np

from . import _kernel
from .graph import Edge, Graph

EdgeSet = frozenset  # frozenset[Edge]


class _Prepared:
    """Edge arrays and CSR incidence lists for one graph."""

    __slots__ = ("n", "edges", "eu", "ev", "inc_ptr", "inc_edge", "inc_other")

    def __init__(self, g: Graph):
        self.n = g.n
        self.edges = g.edges()
        m = len(self.edges)
        self.eu = np.array([u for u, _ in self.edges], dtype=np.int64).reshape(m)
        self.ev = np.array([v for _, v in self.edges], dtype=np.int64).reshape(m)
        incident: list[list[tuple[int, int]]] = [[] for _ in range(g.n)]
        for e, (u, v) in enumerate(self.edges):
            incident[u].append((v, e))
            incident[v].append((u, e))
        ptr = [0]
        edge_ids = []
        others = []
        for v in range(g.n):
            for w, e in sorted(incident[v]):
                others.append(w)
                edge_ids.append(e)
            ptr.append(len(edge_ids))
        self.inc_ptr = np.array(ptr, dtype=np.int64)
        self.inc_edge = np.array(edge_ids, dtype=np.int64).reshape(len(edge_ids))
        self.inc_other = np.array(others, dtype=np.int64).reshape(len(others))


def run_search(
    g: Graph,
    exempt: Iterable[int] = (),
    *,
    min_degree: Optional[dict[int, int]] = None,
    separate: Optional[tuple[int, int]] = None,
    hist_mode: bool = True,
    stop_after: Optional[int] = None,
    record: int = 0,
    prepared: Optional[_Prepared] = None,
) -> tuple[int, int, list[EdgeSet]]:
    """Low-level driver returning ``(count, search_nodes, recorded_edge_sets)``.

    ``min_degree`` maps vertices to a lower bound on their final tree degree
    (default 1 for every vertex).  ``separate=(x, y)`` switches to spanning
    forests with exactly two components, one holding ``x`` and one ``y``.
    ``hist_mode=False`` drops every degree-2 rule, so plain spanning trees
    (or forests) are counted.  ``prepared`` reuses the arrays of an earlier
    ``_Prepared(g)`` across repeated searches of the same graph.
    """
    n = g.n
    if n == 0:
        return 0, 0, []
    if separate is None and n == 1:
        return 1, 1, [frozenset()] if record else []
    p = prepared if prepared is not None else _Prepared(g)
    ex = np.zeros(n, dtype=np.bool_)
    for v in exempt:
        if 0 <= v < n:
            ex[v] = True
    lo = np.ones(n, dtype=np.int64)
    for v, d in (min_degree or {}).items():
        lo[v] = max(d, 1)
    sep_x, sep_y = separate if separate is not None else (-1, -1)
    target = n - 1 if separate is None else n - 2
    rec = np.zeros((max(record, 1), max(target, 1)), dtype=np.int64)
    count, nodes, nrec = _kernel.search(
        n, p.eu, p.ev, p.inc_ptr, p.inc_edge, p.inc_other, ex, lo,
        sep_x, sep_y, hist_mode, stop_after or 0, rec, record,
    )
    found = [frozenset(p.edges[e] for e in rec[i, :target]) for i in range(nrec)]
    return int(count), int(nodes), found


def count_hists(g: Graph, exempt: Iterable[int] = (), stop_after: Optional[int] = None) -> int:
    """Number of spanning trees of ``g`` with no degree-2 vertex outside ``exempt``.

    With ``stop_after`` set, the search stops once that many are found and
    returns ``min(true count, stop_after)``.
    """
    if stop_after is not None and stop_after <= 0:
        return 0
    if g.n > 1 and not g.is_connected():
        return 0
    return run_search(g, exempt, stop_after=stop_after)[0]


def count_spanning_trees_search(g: Graph) -> int:
    """Same search with the HIST rules switched off; counts every spanning tree."""
    if g.n > 1 and not g.is_connected():
        return 0
    return run_search(g, hist_mode=False)[0]


def has_hist(g: Graph, exempt: Iterable[int] = ()) -> bool:
    return count_hists(g, exempt, stop_after=1) > 0


def is_hist(g: Graph, tree: Iterable[Edge], exempt: Iterable[int] = ()) -> bool:
    """Independent check that ``tree`` is a spanning tree of ``g`` without
    degree-2 vertices outside ``exempt``."""
    return _check_forest(g, tree, exempt, components=1)


def _check_forest(g: Graph, edges: Iterable[Edge], exempt: Iterable[int], components: int) -> bool:
    edges = list(edges)
    if len(edges) != g.n - components:
        return False
    parent = list(range(g.n))

    def find(v: int) -> int:
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    deg = [0] * g.n
    for u, v in edges:
        if not g.has_edge(u, v):
            return False
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
        deg[u] += 1
        deg[v] += 1
    ex = set(exempt)
    return all(d != 2 or v in ex for v, d in enumerate(deg))


def find_hist(g: Graph, exempt: Iterable[int] = ()) -> Optional[EdgeSet]:
    """A HIST of ``g`` (degree 2 allowed on ``exempt``), or ``None``."""
    exempt = tuple(exempt)
    if g.n > 1 and not g.is_connected():
        return None
    count, _, found = run_search(g, exempt, stop_after=1, record=1)
    if not count:
        return None
    tree = found[0]
    if not is_hist(g, tree, exempt):
        raise AssertionError("search returned an invalid HIST witness")
    return tree


def _enumerate(g: Graph, **kwargs) -> list[EdgeSet]:
    cap = 64
    while True:
        count, _, found = run_search(g, record=cap, **kwargs)
        if count <= cap:
            return found
        cap = count


def enumerate_excluded_hists(f) -> list[EdgeSet]:
    """All spanning trees of ``f.graph`` whose degree-2 vertices lie in ``{f.x, f.y}``."""
    g = f.graph
    if g.n > 1 and not g.is_connected():
        return []
    trees = _enumerate(g, exempt=(f.x, f.y))
    for t in trees:
        if not is_hist(g, t, (f.x, f.y)):
            raise AssertionError("invalid excluded HIST produced")
    return trees


def is_split_hisf(g: Graph, forest: Iterable[Edge], x: int, y: int) -> bool:
    """Independent check for a two-component spanning forest separating x and y,
    both components on at least two vertices, no degree-2 vertex besides x, y."""
    forest = list(forest)
    if not _check_forest(g, forest, (x, y), components=2):
        return False
    sub = Graph.from_edges(g.n, forest)
    cx = sub.reachable(x)
    if (cx >> y) & 1:
        return False
    cy = sub.reachable(y)
    return cx.bit_count() >= 2 and cy.bit_count() >= 2


def enumerate_split_hisfs(f) -> list[tuple[EdgeSet, EdgeSet]]:
    """All {x,y}-excluded spanning forests with two components ``(T_x, T_y)``,
    each on at least two vertices, ``x`` in ``T_x`` and ``y`` in ``T_y``."""
    g = f.graph
    forests = _enumerate(g, exempt=(f.x, f.y), separate=(f.x, f.y))
    out = []
    for forest in forests:
        if not is_split_hisf(g, forest, f.x, f.y):
            raise AssertionError("invalid split HISF produced")
        side_x = Graph.from_edges(g.n, forest).reachable(f.x)
        tx = frozenset(e for e in forest if (side_x >> e[0]) & 1)
        out.append((tx, forest - tx))
    return out


def has_split_hisf(g: Graph, x: int, y: int) -> bool:
    return run_search(g, (x, y), separate=(x, y), stop_after=1)[0] > 0
