"""Independent checks for the search: exchange enumeration of spanning trees,
matrix-tree counting, brute force, and a few classical exact solvers used by
the structural results (Hamiltonian paths, induced forests, line-graph
correspondences).  Everything here is plain Python and deliberately shares
no code with the compiled search."""

from __future__ import annotations

import sys
from typing import Iterator

from .graph import Graph, GraphError, SizeError, _bits

BRUTE_MAX = 12
DP_MAX = 24
INDUCED_MAX = 20

Edge = tuple[int, int]


# -- exchange enumeration -------------------------------------------------------------


def _dfs_tree(g: Graph) -> set[Edge]:
    tree: set[Edge] = set()
    seen = 1
    stack = [0]
    while stack:
        v = stack[-1]
        nxt = g.adj[v] & ~seen
        if not nxt:
            stack.pop()
            continue
        w = (nxt & -nxt).bit_length() - 1
        seen |= 1 << w
        tree.add((v, w) if v < w else (w, v))
        stack.append(w)
    return tree


def _tree_path(n: int, tree: set[Edge], a: int, b: int) -> list[Edge]:
    """Edges of the tree path from a to b, in order."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in tree:
        adj[u].append(v)
        adj[v].append(u)
    prev = {a: -1}
    stack = [a]
    while stack:
        u = stack.pop()
        if u == b:
            break
        for w in adj[u]:
            if w not in prev:
                prev[w] = u
                stack.append(w)
    path = []
    v = b
    while prev[v] >= 0:
        u = prev[v]
        path.append((u, v) if u < v else (v, u))
        v = u
    path.reverse()
    return path


def exchange_trees(g: Graph, hist_filter: bool = True) -> Iterator[frozenset[Edge]]:
    """Enumerate spanning trees by fundamental-cycle exchanges with in/out marks.

    With ``hist_filter`` only trees without degree-2 vertices are produced and
    branches are cut as soon as some vertex is forced to tree degree 2.
    """
    n = g.n
    if n == 0 or not g.is_connected():
        return
    edges = g.edges()
    incident: list[list[Edge]] = [[] for _ in range(n)]
    for e in edges:
        incident[e[0]].append(e)
        incident[e[1]].append(e)
    mark: dict[Edge, str] = {}

    def forced_two() -> bool:
        for v in range(n):
            ins = outs = 0
            for e in incident[v]:
                s = mark.get(e)
                if s == "in":
                    ins += 1
                elif s == "out":
                    outs += 1
            if ins == 2 and ins + outs == len(incident[v]):
                return True
        return False

    def is_hist(tree) -> bool:
        deg = [0] * n
        for u, v in tree:
            deg[u] += 1
            deg[v] += 1
        return 2 not in deg

    def rec(tree: set[Edge]):
        if hist_filter and forced_two():
            return
        e = next((f for f in edges if f not in tree and mark.get(f) != "out"), None)
        if e is None:
            if not hist_filter or is_hist(tree):
                yield frozenset(tree)
            return
        cycle = _tree_path(n, tree, e[0], e[1])
        mark[e] = "in"
        newly_in = []
        for f in cycle:
            if mark.get(f) == "in":
                continue
            mark[f] = "out"
            yield from rec((tree - {f}) | {e})
            mark[f] = "in"
            newly_in.append(f)
        for f in newly_in:
            del mark[f]
        mark[e] = "out"
        yield from rec(tree)
        del mark[e]

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * len(edges) + 100))
    try:
        yield from rec(_dfs_tree(g))
    finally:
        sys.setrecursionlimit(limit)


def count_hists_exchange(g: Graph, hist_filter: bool = True) -> int:
    if g.n == 1:
        return 1
    return sum(1 for _ in exchange_trees(g, hist_filter))


# -- matrix-tree theorem --------------------------------------------------------------


def kirchhoff_count(g: Graph) -> int:
    """Spanning-tree count as a Laplacian cofactor, by Bareiss elimination."""
    n = g.n
    if n == 0:
        return 0
    size = n - 1
    a = [[0] * size for _ in range(size)]
    for i in range(size):
        a[i][i] = g.degree(i)
        for j in _bits(g.adj[i]):
            if j < size:
                a[i][j] = -1
    prev = 1
    sign = 1
    for k in range(size):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, size) if a[r][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * prev if size else 1


# -- brute force -----------------------------------------------------------------------


def brute_force_hists(g: Graph) -> int:
    """Count HISTs by walking every acyclic edge subset of size n-1."""
    n = g.n
    if n > BRUTE_MAX:
        raise SizeError(f"brute force is limited to n <= {BRUTE_MAX}")
    if n <= 1:
        return n
    edges = g.edges()
    m = len(edges)
    comp = list(range(n))
    deg = [0] * n
    total = 0

    def rec(i: int, chosen: int) -> None:
        nonlocal total
        if chosen == n - 1:
            if 2 not in deg:
                total += 1
            return
        if m - i < n - 1 - chosen:
            return
        u, v = edges[i]
        cu, cv = comp[u], comp[v]
        if cu != cv:
            saved = comp[:]
            for w in range(n):
                if comp[w] == cv:
                    comp[w] = cu
            deg[u] += 1
            deg[v] += 1
            rec(i + 1, chosen + 1)
            deg[u] -= 1
            deg[v] -= 1
            comp[:] = saved
        rec(i + 1, chosen)

    rec(0, 0)
    return total


# -- Hamiltonian paths and induced forests ------------------------------------------------


def ham_path_exists(g: Graph) -> bool:
    n = g.n
    if n > DP_MAX:
        raise SizeError(f"Hamiltonian path DP is limited to n <= {DP_MAX}")
    if n <= 1:
        return True
    full = (1 << n) - 1
    # ends[mask] = vertices at which some path covering exactly mask can end
    ends = [0] * (1 << n)
    for v in range(n):
        ends[1 << v] = 1 << v
    for mask in range(1, full + 1):
        e = ends[mask]
        if not e:
            continue
        if mask == full:
            return True
        reach = 0
        for v in _bits(e):
            reach |= g.adj[v]
        for w in _bits(reach & ~mask):
            nm = mask | (1 << w)
            if not (ends[nm] >> w) & 1 and e & g.adj[w]:
                ends[nm] |= 1 << w
    return False


def max_induced_forest(g: Graph) -> int:
    """Largest vertex set inducing an acyclic subgraph."""
    n = g.n
    if n > DP_MAX:
        raise SizeError(f"induced forest search is limited to n <= {DP_MAX}")
    best = 0
    comp = [-1] * n

    def rec(v: int, size: int) -> None:
        nonlocal best
        if size + (n - v) <= best:
            return
        if v == n:
            best = size
            return
        roots = [comp[w] for w in _bits(g.adj[v] & ((1 << v) - 1)) if comp[w] >= 0]
        if len(roots) == len(set(roots)):
            saved = comp[:]
            for w in range(v):
                if comp[w] >= 0 and comp[w] in roots:
                    comp[w] = v
            comp[v] = v
            rec(v + 1, size + 1)
            comp[:] = saved
        rec(v + 1, size)

    rec(0, 0)
    return best


# -- line-graph correspondences ---------------------------------------------------------------


def _independent_sets(g: Graph) -> Iterator[int]:
    n = g.n

    def rec(v: int, chosen: int, blocked: int):
        if v == n:
            yield chosen
            return
        yield from rec(v + 1, chosen, blocked)
        if not (blocked >> v) & 1:
            yield from rec(v + 1, chosen | (1 << v), blocked | g.adj[v])

    yield from rec(0, 0, 0)


def _check_cubic(g: Graph, residue: int) -> int:
    if g.n > INDUCED_MAX:
        raise SizeError(f"correspondence counters are limited to n <= {INDUCED_MAX}")
    if not g.is_regular(3) or not g.is_connected():
        raise GraphError("needs a connected cubic graph")
    if g.n % 4 != residue:
        raise GraphError(f"order must be {residue} mod 4")
    return g.n // 4


def _rest_shape(g: Graph, removed: int) -> tuple[bool, int, int]:
    keep = ((1 << g.n) - 1) & ~removed
    if not keep:
        return False, 0, 0
    start = (keep & -keep).bit_length() - 1
    connected = g.reachable(start, removed) == keep
    nv = keep.bit_count()
    ne = sum((g.adj[v] & keep).bit_count() for v in _bits(keep)) // 2
    return connected, nv, ne


def count_one_end_induced_trees(g: Graph) -> int:
    """Induced trees T such that every edge outside T has exactly one end on T
    (equivalently, V - V(T) is independent); ``g`` cubic of order 4k+2."""
    _check_cubic(g, 2)
    total = 0
    for ind in _independent_sets(g):
        connected, nv, ne = _rest_shape(g, ind)
        if connected and ne == nv - 1:
            total += 1
    return total


def count_one_end_induced_unicyclics(g: Graph) -> int:
    """Induced connected unicyclic subgraphs with the same one-end property;
    ``g`` cubic of order 4k."""
    _check_cubic(g, 0)
    total = 0
    for ind in _independent_sets(g):
        connected, nv, ne = _rest_shape(g, ind)
        if connected and ne == nv:
            total += 1
    return total


def _cycle_length(g: Graph, keep: int) -> int:
    """Length of the single cycle of the unicyclic graph induced by ``keep``."""
    while True:
        leaves = [v for v in _bits(keep) if (g.adj[v] & keep).bit_count() <= 1]
        if not leaves:
            return keep.bit_count()
        for v in leaves:
            keep &= ~(1 << v)


def one_end_unicyclic_cycle_total(g: Graph) -> int:
    """Sum of cycle lengths over the subgraphs counted by
    ``count_one_end_induced_unicyclics``.

    Each such U with cycle C accounts for exactly 2|C| HISTs of the line
    graph, so twice this total is the HIST count of L(g).  The flat factor 6k
    is only right when every cycle spans U.
    """
    _check_cubic(g, 0)
    full = (1 << g.n) - 1
    total = 0
    for ind in _independent_sets(g):
        connected, nv, ne = _rest_shape(g, ind)
        if connected and ne == nv:
            total += _cycle_length(g, full & ~ind)
    return total
