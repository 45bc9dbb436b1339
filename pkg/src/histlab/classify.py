"""Graph-level verdicts: HIST-free, K1-histonian, HIST-critical, and the
four-property check for HIST-critical {x,y}-fragments."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional

from .graph import Graph, GraphError
from .search import (
    EdgeSet,
    enumerate_excluded_hists,
    enumerate_split_hisfs,
    find_hist,
    has_hist,
    run_search,
)


class Verdict(enum.Enum):
    HAS_HIST = "HAS_HIST"
    HIST_FREE = "HIST_FREE"  # HIST-free but not K1-histonian
    HIST_CRITICAL = "HIST_CRITICAL"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    k1_histonian: bool
    witness: Optional[EdgeSet] = None

    @property
    def is_critical(self) -> bool:
        return self.verdict is Verdict.HIST_CRITICAL


def is_k1_histonian(g: Graph) -> bool:
    return all(has_hist(g.delete_vertex(v)) for v in range(g.n))


def classify(g: Graph) -> Classification:
    witness = find_hist(g)
    k1 = is_k1_histonian(g)
    if witness is not None:
        return Classification(Verdict.HAS_HIST, k1, witness)
    return Classification(Verdict.HIST_CRITICAL if k1 else Verdict.HIST_FREE, k1)


def is_hist_critical(g: Graph) -> bool:
    """Short-circuiting form of ``classify(g).is_critical``."""
    return not has_hist(g) and is_k1_histonian(g)


def check_even_cubic_property(g: Graph) -> bool:
    """True iff no vertex-deleted subgraph of ``g`` has a HIST.

    Only defined for even order at least 4 and maximum degree at most 3,
    where it must always hold (a HIST with only 1- and 3-vertices on two or
    more vertices has even order).  Order 2 is excluded: K2 - v is K1, whose
    one-vertex tree counts as a HIST.
    """
    if g.n % 2 or g.n < 4 or g.max_degree() > 3:
        raise GraphError("needs even order >= 4 and maximum degree <= 3")
    return not any(has_hist(g.delete_vertex(v)) for v in range(g.n))


# -- fragments -------------------------------------------------------------------


@dataclass(frozen=True)
class Fragment:
    graph: Graph
    x: int
    y: int
    labels: dict[str, int] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        n = self.graph.n
        if not (0 <= self.x < n and 0 <= self.y < n) or self.x == self.y:
            raise GraphError("fragment terminals must be two distinct vertices")
        if self.graph.has_edge(self.x, self.y):
            raise GraphError("fragment terminals must be non-adjacent")

    def delete(self, v: int) -> "Fragment":
        """The fragment ``F - v`` for a non-terminal ``v``, terminals renumbered."""
        if v in (self.x, self.y):
            raise GraphError("cannot delete a terminal and keep a fragment")
        shift = lambda u: u - (u > v)  # noqa: E731
        return Fragment(self.graph.delete_vertex(v), shift(self.x), shift(self.y))


@dataclass
class FragmentReport:
    p1: bool
    p2: bool
    p3: bool
    p4: bool
    # property 1: the excluded HISTs; 2: trees of F-x and F-y; 3: per vertex
    # ("a"|"b", witness) or None; 4: offending split forests
    excluded_hists: list[EdgeSet] = field(default_factory=list)
    p2_witnesses: tuple[Optional[EdgeSet], Optional[EdgeSet]] = (None, None)
    p3_witnesses: dict[int, Optional[tuple[str, object]]] = field(default_factory=dict)
    p4_counterexamples: list[tuple[EdgeSet, EdgeSet]] = field(default_factory=list)

    @property
    def is_fragment(self) -> bool:
        return self.p1 and self.p2 and self.p3 and self.p4


def _tree_degree(tree: EdgeSet, v: int) -> int:
    return sum(v in e for e in tree)


def _first(g: Graph, exempt, **kwargs) -> Optional[EdgeSet]:
    count, _, found = run_search(g, exempt, stop_after=1, record=1, **kwargs)
    return found[0] if count else None


def verify_fragment(f: Fragment) -> FragmentReport:
    g, x, y = f.graph, f.x, f.y

    # (1) some {x,y}-excluded HIST exists, and all of them have x, y of tree degree 2
    trees = enumerate_excluded_hists(f) if g.is_connected() else []
    p1 = bool(trees) and all(_tree_degree(t, x) == 2 and _tree_degree(t, y) == 2 for t in trees)

    # (2) F - x has an excluded HIST where y is not a leaf, and symmetrically.
    # Tree degree is meant, as in the chain argument that uses this property.
    def not_leaf_tree(drop: int, keep: int) -> Optional[EdgeSet]:
        h = g.delete_vertex(drop)
        k = keep - (keep > drop)
        if not h.is_connected():
            return None
        return _first(h, (k,), min_degree={k: 2})

    wx = not_leaf_tree(x, y)
    wy = not_leaf_tree(y, x)
    p2 = wx is not None and wy is not None

    # (3) for every non-terminal v: (a) an excluded HIST of F - v with x or y
    # not of degree 2, else (b) a split HISF of F - v
    p3_witnesses: dict[int, Optional[tuple[str, object]]] = {}
    for v in range(g.n):
        if v in (x, y):
            continue
        fv = f.delete(v)
        h = fv.graph
        found: Optional[tuple[str, object]] = None
        if h.is_connected():
            # x held to the normal rule forces d(x) != 2, likewise for y
            for exempt in ((fv.y,), (fv.x,)):
                t = _first(h, exempt)
                if t is not None:
                    found = ("a", t)
                    break
        if found is None:
            forest = _first(h, (fv.x, fv.y), separate=(fv.x, fv.y))
            if forest is not None:
                found = ("b", forest)
        p3_witnesses[v] = found
    p3 = all(w is not None for w in p3_witnesses.values())

    # (4) no split HISF of F itself
    bad = enumerate_split_hisfs(f)
    p4 = not bad

    return FragmentReport(p1, p2, p3, p4, trees, (wx, wy), p3_witnesses, bad)
