"""Explicit graph families and gluing operations.

Labelled constructions record which vertex index carries each symbolic name
(``"a_3"``, ``"x"``, ``"w_0"`` ...), so tests and the CLI can refer to the
same vertices the defining edge lists use.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .classify import Fragment
from .graph import Graph, GraphError


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class LabeledConstruction:
    graph: Graph
    labels: dict[str, int] = field(default_factory=dict)

    def __getitem__(self, name: str) -> int:
        return self.labels[name]


def _build(names: Sequence[str], edges: Sequence[tuple[str, str]]) -> LabeledConstruction:
    index = {name: i for i, name in enumerate(names)}
    g = Graph.from_edges(len(names), [(index[a], index[b]) for a, b in edges])
    return LabeledConstruction(g, index)


# -- small named graphs ---------------------------------------------------


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ConstructionError("a cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def star(leaves: int) -> Graph:
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism(k: int = 3) -> Graph:
    """Circular ladder C_k x K_2; ``prism(3)`` is the triangular prism."""
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(i, j), (k + i, k + j), (i, k + i)]
    return Graph.from_edges(2 * k, edges)


def cube() -> Graph:
    return Graph.from_edges(8, [(u, u ^ (1 << b)) for u in range(8) for b in range(3) if u < u ^ (1 << b)])


# -- antiprisms ------------------------------------------------------------


def antiprism(k: int) -> LabeledConstruction:
    """Order-2k antiprism: cycles v_0..v_{k-1} and w_0..w_{k-1} plus rim edges
    v_i w_i and v_i w_{i+1} (indices mod k)."""
    if k < 3:
        raise ConstructionError("antiprism needs k >= 3")
    names = [f"v_{i}" for i in range(k)] + [f"w_{i}" for i in range(k)]
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges += [(f"v_{i}", f"v_{j}"), (f"w_{i}", f"w_{j}"), (f"v_{i}", f"w_{i}"), (f"v_{i}", f"w_{j}")]
    return _build(names, edges)


# -- the planar HIST-critical family -----------------------------------------


def g_k(k: int) -> LabeledConstruction:
    """Order 3k+1: two triangle strips a/c and b/c sharing the c_i, closed by x and y."""
    if k < 3:
        raise ConstructionError("G_k needs k >= 3")
    names = ([f"a_{i}" for i in range(1, k + 1)] + [f"b_{i}" for i in range(1, k + 1)]
             + [f"c_{i}" for i in range(1, k)] + ["x", "y"])
    edges = []
    for i in range(1, k):
        edges += [(f"a_{i}", f"a_{i + 1}"), (f"a_{i}", f"c_{i}"), (f"a_{i + 1}", f"c_{i}"),
                  (f"b_{i}", f"b_{i + 1}"), (f"b_{i}", f"c_{i}"), (f"b_{i + 1}", f"c_{i}")]
    edges += [("a_1", "x"), (f"a_{k}", "x"), ("b_1", "y"), (f"b_{k}", "y"), ("x", "y")]
    return _build(names, edges)


def h_k(k: int) -> LabeledConstruction:
    base = g_k(k)
    return LabeledConstruction(base.graph.add_edge(base["a_1"], base[f"a_{k}"]), base.labels)


# -- fragments -----------------------------------------------------------------


def _fragment(ell: int, edges: Sequence[tuple[str, str]]) -> Fragment:
    names = ["x", "y"] + [f"v_{i}" for i in range(1, ell + 1)]
    lc = _build(names, edges)
    return Fragment(lc.graph, lc["x"], lc["y"], lc.labels)


def _parse_edges(text: str) -> list[tuple[str, str]]:
    out = []
    for item in text.split():
        a, b = item.split("-")
        out.append((a, b))
    return out


def fragment_f1() -> Fragment:
    """Petersen graph minus two adjacent vertices, terminals x and y."""
    return _fragment(6, _parse_edges(
        "x-v_3 x-v_6 y-v_1 y-v_4 v_1-v_2 v_1-v_6 v_2-v_3 v_3-v_4 v_4-v_5 v_5-v_6"))


def fragment_f2() -> Fragment:
    return _fragment(10, _parse_edges(
        "x-v_1 x-v_8 y-v_6 y-v_9 v_1-v_2 v_1-v_6 v_1-v_7 v_2-v_3 v_3-v_4 v_3-v_8 "
        "v_4-v_5 v_4-v_9 v_5-v_6 v_6-v_10 v_7-v_9 v_8-v_10"))


def chain(fragments: Sequence[Fragment]) -> Graph:
    """Ring of fragments: y_i is identified with x_{i+1} (indices mod k).

    With k = 2 both terminals are shared by the two fragments.  The order is
    the sum of the fragment orders minus k.
    """
    k = len(fragments)
    if k < 2:
        raise ConstructionError("a chain needs at least two fragments")
    for f in fragments:
        if f.graph.has_edge(f.x, f.y):
            raise ConstructionError("fragment terminals must be non-adjacent")
    # ring vertices r_0..r_{k-1}; fragment i spans r_i (its x) and r_{i+1} (its y)
    next_id = k
    edges: set[tuple[int, int]] = set()
    for i, f in enumerate(fragments):
        mapping = {}
        for v in range(f.graph.n):
            if v == f.x:
                mapping[v] = i
            elif v == f.y:
                mapping[v] = (i + 1) % k
            else:
                mapping[v] = next_id
                next_id += 1
        for u, v in f.graph.edges():
            a, b = sorted((mapping[u], mapping[v]))
            if (a, b) in edges:
                raise ConstructionError(f"chain would create a parallel edge {a}-{b}")
            edges.add((a, b))
    return Graph.from_edges(next_id, sorted(edges))


def glue(g: Graph, xg: int, yg: int, h: Graph, xh: int, yh: int) -> Graph:
    """``(G, x_G, y_G):(H, x_H, y_H)``: identify the terminal pairs, add a
    vertex z adjacent to both, then add the edge xy.  G keeps its labels, the
    rest of H follows, z is last."""
    if xg == yg or g.has_edge(xg, yg):
        raise ConstructionError("x_G and y_G must be distinct and non-adjacent")
    if xh == yh or h.has_edge(xh, yh):
        raise ConstructionError("x_H and y_H must be distinct and non-adjacent")
    mapping = {xh: xg, yh: yg}
    nxt = g.n
    for v in range(h.n):
        if v not in mapping:
            mapping[v] = nxt
            nxt += 1
    z = nxt
    edges = set(g.edges())
    for u, v in h.edges():
        edges.add(tuple(sorted((mapping[u], mapping[v]))))
    edges |= {(min(xg, z), max(xg, z)), (min(yg, z), max(yg, z)), (min(xg, yg), max(xg, yg))}
    return Graph.from_edges(z + 1, sorted(edges))


# -- line graphs, truncation, inflation ---------------------------------------


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in ``g.edges()`` order."""
    es = g.edges()
    adj = []
    for i, (a, b) in enumerate(es):
        for j in range(i + 1, len(es)):
            c, d = es[j]
            if a in (c, d) or b in (c, d):
                adj.append((i, j))
    return Graph.from_edges(len(es), adj)


def _corner(g: Graph, v: int, w: int) -> int:
    return g.neighbors(v).index(w)


def truncate_cubic(g: Graph) -> Graph:
    """Replace vertex v by the triangle 3v, 3v+1, 3v+2; corner i carries the
    edge to the i-th neighbour of v in ascending order."""
    if not g.is_regular(3):
        raise GraphError("truncation needs a cubic graph")
    edges = []
    for v in range(g.n):
        edges += [(3 * v, 3 * v + 1), (3 * v, 3 * v + 2), (3 * v + 1, 3 * v + 2)]
    for u, v in g.edges():
        edges.append((3 * u + _corner(g, u, v), 3 * v + _corner(g, v, u)))
    return Graph.from_edges(3 * g.n, edges)


def inflate_k4(g: Graph) -> Graph:
    """K4-inflation of a 4-regular graph; corner 4v+i carries the edge to the
    i-th neighbour of v in ascending order."""
    if not g.is_regular(4):
        raise GraphError("K4-inflation needs a 4-regular graph")
    edges = []
    for v in range(g.n):
        edges += [(4 * v + i, 4 * v + j) for i, j in combinations(range(4), 2)]
    for u, v in g.edges():
        edges.append((4 * u + _corner(g, u, v), 4 * v + _corner(g, v, u)))
    return Graph.from_edges(4 * g.n, edges)
