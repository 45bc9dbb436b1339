"""Desk-scale recomputation of the enumeration tables.

t1  number of HIST-critical graphs per order, with girth lower bounds 3..7
t2  number of planar HIST-critical graphs per order
t3  minimum HIST count over planar 4-connected graphs, and how many attain it
t4  number of planar 4-connected graphs, and whether each has a HIST

HIST-critical graphs are 2-connected, so t1/t2 search 2-connected graphs.
For girth 3 at order 10 the literal route (about 11.7 million connected graphs)
is too slow in Python; ``critical_by_extension`` covers it instead.  It relies
on this fact: if G is HIST-free and T is a HIST of G - v, every neighbour u of
v is a leaf of T, otherwise T + uv would be a HIST of G.  So G arises from a
parent P = G - v that has a HIST by joining a new vertex to vertices that are
leaves in every HIST of P.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterable, Optional

from .classify import is_hist_critical, is_k1_histonian
from .graph import Graph, SizeError, is_planar, to_graph6
from .generate import GenConstraints, canonical_form, certificate, connected_graphs, generate
from .search import _Prepared, count_hists, has_hist, run_search

GIRTHS = (3, 4, 5, 6, 7)
T1_CEILING = 11
T1_GIRTH3_CEILING = 10
T2_CEILING = 10
T34_CEILING = 10
EXTENSION_MIN_ORDER = 10


def _internal(tree) -> int:
    deg: dict[int, int] = {}
    for u, v in tree:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    return sum(1 << v for v, d in deg.items() if d >= 3)


def always_leaves(g: Graph) -> Optional[list[int]]:
    """Vertices that are leaves in every HIST of ``g``; ``None`` if ``g`` has no HIST."""
    prep = _Prepared(g)
    count, _, found = run_search(g, stop_after=1, record=1, prepared=prep)
    if not count:
        return None
    inner = _internal(found[0])
    out = []
    for u in range(g.n):
        if (inner >> u) & 1:
            continue
        count, _, found = run_search(g, min_degree={u: 3}, stop_after=1, record=1, prepared=prep)
        if count:
            inner |= _internal(found[0])
        else:
            out.append(u)
    return out


def _two_connected(g: Graph) -> bool:
    return g.n >= 3 and g.is_connected() and not g.cut_vertices()


def critical_by_extension(n: int, parents: Optional[Iterable[Graph]] = None) -> list[Graph]:
    """All HIST-critical graphs of order ``n``, in canonical form, sorted by graph6.

    The new vertex is taken to be of minimum degree in the child, which every
    isomorphism class admits.
    """
    if parents is None:
        parents = connected_graphs(n - 1)
    found: dict[bytes, Graph] = {}
    seen: set[bytes] = set()
    for p in parents:
        leaves = always_leaves(p)
        if not leaves or len(leaves) < 2:
            continue
        degs = p.degrees()
        for size in range(2, len(leaves) + 1):
            if min(degs) + 1 < size:
                break
            for s in combinations(leaves, size):
                chosen = set(s)
                if any(d + (u in chosen) < size for u, d in enumerate(degs)):
                    continue
                g = p.add_vertex(s)
                cert = certificate(g)
                if cert in seen:
                    continue
                seen.add(cert)
                if _two_connected(g) and not has_hist(g) and is_k1_histonian(g):
                    found[cert] = g
    return sorted((canonical_form(g) for g in found.values()), key=to_graph6)


@lru_cache(maxsize=2)
def _extension_default(n: int) -> tuple[Graph, ...]:
    return tuple(critical_by_extension(n))


def critical_graphs(n: int, girth_min: int = 3, planar: bool = False,
                    method: str = "auto") -> list[Graph]:
    """HIST-critical graphs of order ``n`` with girth at least ``girth_min``."""
    if method == "auto":
        method = "extension" if n >= EXTENSION_MIN_ORDER and girth_min <= 3 else "literal"
    if method == "literal":
        c = GenConstraints(order=n, connectivity_min=2,
                           girth_min=girth_min if girth_min > 3 else None, planar_only=planar)
        return [g for g in generate(c) if is_hist_critical(g)]
    if method != "extension":
        raise ValueError(f"unknown method {method!r}")
    out = _extension_default(n)
    return [g for g in out if g.girth() >= girth_min and (not planar or is_planar(g))]


# -- tables ----------------------------------------------------------------------------------


@dataclass(frozen=True)
class Table:
    title: str
    header: tuple[str, ...]
    rows: tuple[tuple, ...]

    def format(self) -> str:
        cells = [self.header] + [tuple("?" if c is None else str(c) for c in r) for r in self.rows]
        widths = [max(len(r[i]) for r in cells) for i in range(len(self.header))]
        lines = [self.title]
        for j, r in enumerate(cells):
            lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip())
            if j == 0:
                lines.append("  ".join("-" * w for w in widths))
        return "\n".join(lines)


def _ceiling(max_order: int, ceiling: int, name: str) -> None:
    if max_order > ceiling:
        raise SizeError(f"{name} is limited to order <= {ceiling}")


def table1(max_order: int = 9, progress: Optional[Callable[[str], None]] = None) -> Table:
    """h(g, n): HIST-critical graphs of order n with girth at least g.
    Cells above the girth-3 ceiling are left unknown."""
    _ceiling(max_order, T1_CEILING, "t1")
    rows = []
    for n in range(3, max_order + 1):
        row: list = [n]
        for g in GIRTHS:
            if g == 3 and n > T1_GIRTH3_CEILING:
                row.append(None)
                continue
            row.append(len(critical_graphs(n, g)))
            if progress:
                progress(f"t1 n={n} girth>={g}: {row[-1]}")
        rows.append(tuple(row))
    header = ("n",) + tuple(f"h({g},n)" for g in GIRTHS)
    return Table("HIST-critical graphs by order and girth lower bound", header, tuple(rows))


def table2(max_order: int = 10, progress: Optional[Callable[[str], None]] = None) -> Table:
    _ceiling(max_order, T2_CEILING, "t2")
    rows = []
    for n in range(3, max_order + 1):
        rows.append((n, len(critical_graphs(n, planar=True))))
        if progress:
            progress(f"t2 n={n}: {rows[-1][1]}")
    return Table("Planar HIST-critical graphs by order", ("n", "count"), tuple(rows))


def planar_4connected(n: int) -> list[Graph]:
    c = GenConstraints(order=n, connectivity_min=4, min_degree=4, planar_only=True)
    return list(generate(c))


@dataclass(frozen=True)
class MinimumRow:
    order: int
    graphs: int
    minimum: Optional[int]
    attained_by: int
    all_have_hist: bool
    minimizers: tuple[Graph, ...]


def planar_4connected_summary(n: int) -> MinimumRow:
    graphs = planar_4connected(n)
    counts = [count_hists(g) for g in graphs]
    low = min(counts) if counts else None
    minimizers = tuple(g for g, c in zip(graphs, counts) if c == low)
    return MinimumRow(n, len(graphs), low, len(minimizers), all(c > 0 for c in counts), minimizers)


def table3(max_order: int = 10, progress: Optional[Callable[[str], None]] = None) -> Table:
    _ceiling(max_order, T34_CEILING, "t3")
    rows = []
    for n in range(6, max_order + 1):
        r = planar_4connected_summary(n)
        rows.append((n, r.minimum, r.attained_by))
        if progress:
            progress(f"t3 n={n}: p={r.minimum} attained by {r.attained_by}")
    return Table("Minimum HIST count over planar 4-connected graphs", ("n", "p(n)", "attained_by"),
                 tuple(rows))


def table4(max_order: int = 10, progress: Optional[Callable[[str], None]] = None) -> Table:
    _ceiling(max_order, T34_CEILING, "t4")
    rows = []
    for n in range(6, max_order + 1):
        r = planar_4connected_summary(n)
        rows.append((n, r.graphs, "yes" if r.all_have_hist else "no"))
        if progress:
            progress(f"t4 n={n}: {r.graphs}")
    return Table("Planar 4-connected graphs and HIST existence", ("n", "graphs", "all_have_hist"),
                 tuple(rows))


TABLES = {"t1": table1, "t2": table2, "t3": table3, "t4": table4}

__all__ = [
    "always_leaves", "critical_by_extension", "critical_graphs", "planar_4connected",
    "planar_4connected_summary", "table1", "table2", "table3", "table4", "Table", "TABLES",
]
