"""Simple undirected graphs with bitset adjacency rows, graph6 I/O and
structural predicates (girth, vertex connectivity, planarity).

Vertices are ``0..n-1``.  Each adjacency row is a Python int used as a bitset,
so ``(g.adj[u] >> v) & 1`` tests the edge ``uv``.  Graphs are immutable; every
mutating operation returns a fresh graph.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations
from typing import Iterable, Iterator, Sequence

DEFAULT_CAP = 128
INFINITE = float("inf")

Edge = tuple[int, int]


class GraphError(ValueError):
    """Precondition violation on a graph operation."""


class Graph6Error(GraphError):
    """Malformed graph6 text."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}{message} (byte offset {offset})")
        self.message = message
        self.offset = offset
        self.line = line


class SizeError(GraphError):
    """Graph too large for the requested operation."""


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    __slots__ = ("n", "adj", "m", "cap")

    def __init__(self, n: int, adj: Sequence[int] = (), *, cap: int = DEFAULT_CAP):
        if n < 0:
            raise GraphError("negative vertex count")
        if n > cap:
            raise SizeError(f"{n} vertices exceeds the vertex cap {cap}")
        rows = tuple(adj) if adj else (0,) * n
        if len(rows) != n:
            raise GraphError("adjacency rows do not match n")
        full = (1 << n) - 1
        total = 0
        for v, row in enumerate(rows):
            if row & ~full or (row >> v) & 1:
                raise GraphError(f"row {v} has out-of-range or loop bits")
            total += row.bit_count()
        for v, row in enumerate(rows):
            for u in _bits(row):
                if not (rows[u] >> v) & 1:
                    raise GraphError(f"adjacency not symmetric at {u},{v}")
        self.n = n
        self.adj = rows
        self.m = total // 2
        self.cap = cap

    @classmethod
    def _trusted(cls, n: int, rows) -> "Graph":
        """Skip validation; rows must already be a symmetric loop-free adjacency."""
        g = object.__new__(cls)
        g.n = n
        g.adj = tuple(rows)
        g.m = sum(r.bit_count() for r in g.adj) // 2
        g.cap = DEFAULT_CAP
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], *, cap: int = DEFAULT_CAP) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} out of range for n={n}")
            if (rows[u] >> v) & 1:
                raise GraphError(f"parallel edge {u}-{v}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, cap=cap)

    # -- basic queries -------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m}, g6={to_graph6(self)!r})"

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[Edge]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))]

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_regular(self, k: int) -> bool:
        return all(d == k for d in self.degrees())

    def reachable(self, start: int, removed: int = 0) -> int:
        """Bitset of vertices reachable from ``start`` avoiding the ``removed`` bitset."""
        seen = 1 << start
        frontier = seen
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            nxt &= ~seen & ~removed
            seen |= nxt
            frontier = nxt
        return seen

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.reachable(0) == (1 << self.n) - 1

    def components(self) -> list[list[int]]:
        left = (1 << self.n) - 1
        comps = []
        while left:
            start = (left & -left).bit_length() - 1
            comp = self.reachable(start)
            comps.append(list(_bits(comp)))
            left &= ~comp
        return comps

    def cut_vertices(self) -> set[int]:
        full = (1 << self.n) - 1
        cuts = set()
        for v in range(self.n):
            rest = full & ~(1 << v)
            if not rest:
                continue
            start = (rest & -rest).bit_length() - 1
            if self.reachable(start, removed=1 << v) != rest:
                cuts.add(v)
        return cuts

    # -- derived graphs ------------------------------------------------

    def delete_vertex(self, v: int) -> "Graph":
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} not in graph of order {self.n}")
        low = (1 << v) - 1
        rows = []
        for u, row in enumerate(self.adj):
            if u == v:
                continue
            rows.append((row & low) | ((row >> (v + 1)) << v))
        return Graph(self.n - 1, rows, cap=self.cap)

    def induced_subgraph(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph.from_edges(len(vertices), edges, cap=self.cap)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"invalid edge {u}-{v}")
        if self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} already present")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows, cap=self.cap)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        rows = list(self.adj)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows, cap=self.cap)

    def subdivide_edge(self, u: int, v: int) -> "Graph":
        """Replace ``uv`` by the path ``u - w - v`` with ``w = n``."""
        if not (0 <= u < self.n and 0 <= v < self.n) or not self.has_edge(u, v):
            raise GraphError(f"edge {u}-{v} not present")
        w = self.n
        rows = list(self.adj) + [(1 << u) | (1 << v)]
        rows[u] = (rows[u] & ~(1 << v)) | (1 << w)
        rows[v] = (rows[v] & ~(1 << u)) | (1 << w)
        return Graph(self.n + 1, rows, cap=self.cap)

    def add_vertex(self, neighbors: Iterable[int] = ()) -> "Graph":
        w = self.n
        rows = list(self.adj) + [0]
        for u in neighbors:
            rows[u] |= 1 << w
            rows[w] |= 1 << u
        return Graph(self.n + 1, rows, cap=self.cap)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()), cap=self.cap)

    # -- predicates ----------------------------------------------------

    def girth(self) -> float:
        return girth(self)

    def is_planar(self) -> bool:
        return is_planar(self)

    def vertex_connectivity_at_least(self, k: int) -> bool:
        return vertex_connectivity_at_least(self, k)


# ---------------------------------------------------------------------------
# graph6


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, 63 + (n >> 12 & 63), 63 + (n >> 6 & 63), 63 + (n & 63)])
    raise SizeError(f"graph6 cannot encode n={n} here")


def to_graph6(g: Graph) -> str:
    if g.n > g.cap:
        raise SizeError(f"order {g.n} exceeds cap {g.cap}")
    out = bytearray(_encode_n(g.n))
    group = 0
    nbits = 0
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            group = (group << 1) | ((row >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(group + 63)
                group = nbits = 0
    if nbits:
        out.append((group << (6 - nbits)) + 63)
    return out.decode("ascii")


def from_graph6(text: str | bytes, *, cap: int = DEFAULT_CAP) -> Graph:
    data = text.encode("ascii") if isinstance(text, str) else bytes(text)
    if data.endswith(b"\n"):
        data = data[:-1]
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty graph6 string", 0)
    for i, c in enumerate(data):
        if not 63 <= c <= 126:
            raise Graph6Error(f"byte {c!r} outside graph6 range 63..126", i)
    if data[0] != 126:
        n, pos = data[0] - 63, 1
    else:
        if len(data) < 4:
            raise Graph6Error("truncated long-form header", len(data))
        if data[1] == 126:
            raise Graph6Error("8-byte header form not supported", 1)
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        pos = 4
        if n <= 62:
            raise Graph6Error("long-form header used for n <= 62", 0)
    if n > cap:
        raise SizeError(f"graph6 order {n} exceeds cap {cap}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) < need:
        raise Graph6Error(f"truncated body: expected {need} bytes, got {len(body)}", len(data))
    if len(body) > need:
        raise Graph6Error("trailing garbage after graph6 body", pos + need)
    pad = need * 6 - nbits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits", len(data) - 1)
    rows = [0] * n
    k = 0
    for v in range(1, n):
        for u in range(v):
            byte = body[k // 6] - 63
            if (byte >> (5 - k % 6)) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            k += 1
    return Graph(n, rows, cap=cap)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each non-blank line; errors name the line."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        try:
            yield lineno, from_graph6(line)
        except Graph6Error as exc:
            raise Graph6Error(exc.message, exc.offset, lineno) from exc
        except GraphError as exc:
            raise Graph6Error(str(exc), 0, lineno) from exc


# ---------------------------------------------------------------------------
# structural predicates


def girth(g: Graph) -> float:
    """Length of a shortest cycle, ``INFINITE`` for forests."""
    best = INFINITE
    for s in range(g.n):
        dist = {s: 0}
        parent = {s: -1}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in _bits(g.adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif parent[u] != w:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


def _local_connectivity(g: Graph, s: int, t: int, limit: int) -> int:
    """Number of internally disjoint s-t paths, capped at ``limit`` (Menger via unit flows)."""
    # split v into v_in = 2v, v_out = 2v+1; residual capacities in a dict
    cap: dict[tuple[int, int], int] = {}
    nbrs: dict[int, list[int]] = {}

    def arc(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)
        nbrs.setdefault(a, []).append(b)
        nbrs.setdefault(b, []).append(a)

    big = g.n + 1
    for v in range(g.n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while flow < limit:
        prev = {source: source}
        queue = deque([source])
        while queue and sink not in prev:
            a = queue.popleft()
            for b in nbrs.get(a, ()):
                if b not in prev and cap[(a, b)] > 0:
                    prev[b] = a
                    queue.append(b)
        if sink not in prev:
            break
        b = sink
        while b != source:
            a = prev[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1
    return flow


def vertex_connectivity_at_least(g: Graph, k: int) -> bool:
    """True iff no vertex cut of size < k exists; K_n counts as (n-1)-connected."""
    if k <= 0:
        return True
    n = g.n
    if n == 0 or not g.is_connected():
        return False
    if all(row.bit_count() == n - 1 for row in g.adj):
        return k <= n - 1
    if g.min_degree() < k:
        return False
    for s, t in combinations(range(n), 2):
        if g.has_edge(s, t):
            continue
        if _local_connectivity(g, s, t, k) < k:
            return False
    return True


def is_planar(g: Graph) -> bool:
    if g.n >= 3 and g.m > 3 * g.n - 6:
        return False
    if g.m < 9:
        # K5 and K3,3 subdivisions need at least 9 edges
        return True
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return nx.check_planarity(h)[0]


def to_networkx(g: Graph):
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h
