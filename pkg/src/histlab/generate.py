"""Isomorph-free exhaustive generation of small graphs.

Graphs grow one vertex at a time (canonical augmentation).  A child ``P + v``
is kept only when ``v`` lies in the automorphism orbit of the child's
canonical deletion vertex, and neighbour sets of ``v`` are taken up to the
automorphisms of ``P``.  The canonical deletion vertex is the eligible vertex
with the smallest (degree, sorted neighbour degrees) key, ties broken by the
largest canonical-labelling position; in connected mode only non-cut vertices
are eligible so every intermediate graph stays connected.

Hereditary constraints (maximum degree, girth, planarity) and a look-ahead on
the minimum degree are enforced on every level; connectivity above 1 is a
final filter.

``brute_mask_generate`` is an independent oracle: it walks all labelled
graphs and keeps the minimum adjacency bitstring of every orbit.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Optional

import numpy as np
import pynauty

from .graph import Graph, SizeError, _bits, is_planar, vertex_connectivity_at_least

MAX_ORDER = 11
BRUTE_MAX_ORDER = 7


@dataclass(frozen=True)
class GenConstraints:
    order: int
    min_degree: Optional[int] = None
    max_degree: Optional[int] = None
    regular_k: Optional[int] = None
    connectivity_min: Optional[int] = None
    girth_min: Optional[int] = None
    planar_only: bool = False

    def degree_bounds(self) -> tuple[int, int]:
        lo = self.min_degree or 0
        hi = self.order - 1 if self.max_degree is None else self.max_degree
        if self.regular_k is not None:
            lo = max(lo, self.regular_k)
            hi = min(hi, self.regular_k)
        return lo, max(hi, -1)

    def accepts(self, g: Graph) -> bool:
        """Check every constraint on a finished graph with independent predicates."""
        lo, hi = self.degree_bounds()
        degs = g.degrees()
        if g.n != self.order or any(d < lo or d > hi for d in degs):
            return False
        k = self.connectivity_min or 0
        if k >= 1 and not g.is_connected():
            return False
        if k >= 2 and not vertex_connectivity_at_least(g, k):
            return False
        if self.girth_min is not None and g.girth() < self.girth_min:
            return False
        if self.planar_only and not is_planar(g):
            return False
        return True


# -- canonical forms ----------------------------------------------------------------


def _nauty(n: int, rows) -> pynauty.Graph:
    return pynauty.Graph(n, adjacency_dict={v: list(_bits(rows[v])) for v in range(n)})


def certificate(g: Graph) -> bytes:
    """Canonical certificate: equal iff the graphs are isomorphic (same order)."""
    if g.n == 0:
        return b""
    return g.n.to_bytes(2, "big") + pynauty.certificate(_nauty(g.n, g.adj))


def canonical_form(g: Graph) -> Graph:
    if g.n == 0:
        return g
    lab = pynauty.canon_label(_nauty(g.n, g.adj))
    pos = [0] * g.n
    for i, v in enumerate(lab):
        pos[v] = i
    return g.relabel(pos)


# -- canonical augmentation ------------------------------------------------------------


def _is_cut(rows, n: int, v: int) -> bool:
    rest = ((1 << n) - 1) & ~(1 << v)
    if not rest:
        return False
    start = (rest & -rest).bit_length() - 1
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= rest & ~seen
        seen |= nxt
        frontier = nxt
    return seen != rest


def _distances(rows, n: int) -> list[list[int]]:
    big = n + 1
    out = []
    for s in range(n):
        dist = [big] * n
        dist[s] = 0
        frontier = 1 << s
        seen = frontier
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= rows[u]
            nxt &= ~seen
            for u in _bits(nxt):
                dist[u] = d
            seen |= nxt
            frontier = nxt
        out.append(dist)
    return out


def _permute_mask(mask: int, perm) -> int:
    out = 0
    for v in _bits(mask):
        out |= 1 << perm[v]
    return out


class _Augmenter:
    def __init__(self, c: GenConstraints):
        self.c = c
        self.n = c.order
        self.md, self.Md = c.degree_bounds()
        kappa = c.connectivity_min or 0
        if c.order > kappa:
            # a k-connected graph on more than k vertices has minimum degree >= k
            self.md = max(self.md, kappa)
        self.connected = kappa >= 1
        g = c.girth_min
        self.girth = g if g is not None and g > 3 else None
        self.planar = c.planar_only
        self.stats = {"children": 0, "nauty": 0, "accepted": 0}

    def run(self) -> Iterator[Graph]:
        n = self.n
        if n == 0:
            if self.md <= 0 and not self.connected:
                yield Graph(0)
            return
        if self.md > self.Md:
            return
        yield from self._extend([0], [0], 1)

    def _need(self, k: int) -> int:
        """Minimum degree every vertex must have at order k."""
        return self.md - (self.n - k)

    def _final_ok(self, rows, degs, k: int) -> bool:
        if any(d < self.md for d in degs):
            return False
        c = self.c.connectivity_min or 0
        if c >= 2:
            g = Graph._trusted(k, rows)
            if c == 2:
                return k >= 3 and not any(_is_cut(rows, k, v) for v in range(k))
            return vertex_connectivity_at_least(g, c)
        return True

    def _extend(self, rows, degs, k: int) -> Iterator[Graph]:
        if k == self.n:
            if self._final_ok(rows, degs, k):
                yield Graph._trusted(k, list(rows))
            return
        need = self._need(k + 1)
        forced = 0
        optional = []
        for u in range(k):
            if degs[u] >= self.Md:
                if degs[u] < need:
                    return
                continue
            if degs[u] < need:
                forced |= 1 << u
            else:
                optional.append(u)
        lo_size = max(need, 1 if self.connected else 0)
        hi_size = self.Md
        if self.planar and k + 1 >= 3:
            hi_size = min(hi_size, 3 * (k + 1) - 6 - sum(degs) // 2)
        conflict = None
        if self.girth is not None:
            dist = _distances(rows, k)
            lim = self.girth - 2  # joining u and w closes a cycle of length dist + 2
            conflict = [sum(1 << w for w in range(k) if w != u and dist[u][w] < lim) for u in range(k)]
            for u in _bits(forced):
                if conflict[u] & forced:
                    return
        subsets = [forced]
        for u in optional:
            bit = 1 << u
            if conflict is None:
                subsets += [s | bit for s in subsets]
            else:
                cu = conflict[u]
                subsets += [s | bit for s in subsets if not s & cu]
        subsets = [s for s in subsets if lo_size <= s.bit_count() <= hi_size]
        if not subsets:
            return

        gens = None
        if k > 1:
            gens_list, grpsize1, grpsize2, _, _ = pynauty.autgrp(_nauty(k, rows))
            if grpsize1 != 1.0 or grpsize2 != 0:
                gens = gens_list
        done: set[int] = set()
        for s in sorted(subsets, key=lambda s: (s.bit_count(), s)):
            if gens:
                if s in done:
                    continue
                orbit = {s}
                stack = [s]
                while stack:
                    t = stack.pop()
                    for p in gens:
                        img = _permute_mask(t, p)
                        if img not in orbit:
                            orbit.add(img)
                            stack.append(img)
                done |= orbit
            child = self._accept(rows, degs, k, s)
            if child is None:
                continue
            crow, cdeg = child
            if self.planar and k + 1 >= 5 and not is_planar(Graph._trusted(k + 1, crow)):
                continue
            self.stats["accepted"] += 1
            yield from self._extend(crow, cdeg, k + 1)

    def _accept(self, rows, degs, k: int, s: int):
        self.stats["children"] += 1
        dv = s.bit_count()
        newbit = 1 << k
        cdeg = [d + ((s >> u) & 1) for u, d in enumerate(degs)]
        cdeg.append(dv)
        crow = None
        # cheapest rejection: an eligible vertex of smaller degree
        smaller = [u for u in range(k) if cdeg[u] < dv]
        if smaller:
            if not self.connected:
                return None
            crow = [r | newbit if (s >> u) & 1 else r for u, r in enumerate(rows)] + [s]
            for u in smaller:
                if cdeg[u] <= 1 or not _is_cut(crow, k + 1, u):
                    return None
        if crow is None:
            crow = [r | newbit if (s >> u) & 1 else r for u, r in enumerate(rows)] + [s]
        key_v = sorted(cdeg[w] for w in _bits(s))
        cands = [k]
        for u in range(k):
            if cdeg[u] != dv:
                continue
            key_u = sorted(cdeg[w] for w in _bits(crow[u]))
            if key_u > key_v:
                continue
            if self.connected and _is_cut(crow, k + 1, u):
                continue
            if key_u < key_v:
                return None
            cands.append(u)
        if len(cands) == 1:
            return crow, cdeg
        self.stats["nauty"] += 1
        g = _nauty(k + 1, crow)
        lab = pynauty.canon_label(g)
        orbits = pynauty.autgrp(g)[3]
        pos = [0] * (k + 1)
        for i, v in enumerate(lab):
            pos[v] = i
        best = max(cands, key=lambda u: pos[u])
        if orbits[best] != orbits[k]:
            return None
        return crow, cdeg


def generate(c: GenConstraints) -> Iterator[Graph]:
    """One graph per isomorphism class satisfying ``c``, in deterministic order."""
    if c.order > MAX_ORDER:
        raise SizeError(f"generation is limited to order <= {MAX_ORDER}")
    return _Augmenter(c).run()


def connected_graphs(n: int, **kwargs) -> Iterator[Graph]:
    return generate(GenConstraints(order=n, connectivity_min=1, **kwargs))


# -- brute-force oracle -----------------------------------------------------------------


def brute_mask_generate(n: int) -> Iterator[Graph]:
    """Every graph on ``n <= 7`` vertices, one per class: the minimum edge mask
    (bit i = i-th pair in graph6 column order) over all vertex permutations."""
    if n > BRUTE_MAX_ORDER:
        raise SizeError(f"brute-force generation is limited to n <= {BRUTE_MAX_ORDER}")
    pairs = [(u, v) for v in range(1, n) for u in range(v)]
    npairs = len(pairs)
    if n <= 1:
        yield Graph(n)
        return
    index = {p: i for i, p in enumerate(pairs)}
    perms = list(permutations(range(n)))
    # image[i][p] = bit position of pair i under permutation p
    image = np.empty((npairs, len(perms)), dtype=np.int64)
    for j, p in enumerate(perms):
        for i, (u, v) in enumerate(pairs):
            a, b = p[u], p[v]
            image[i, j] = index[(a, b) if a < b else (b, a)]
    weights = np.left_shift(np.int64(1), image)
    covered = np.zeros(1 << npairs, dtype=np.bool_)
    mask = 0
    total = 1 << npairs
    while mask < total:
        bits = [i for i in range(npairs) if (mask >> i) & 1]
        orbit = weights[bits].sum(axis=0) if bits else np.zeros(len(perms), dtype=np.int64)
        covered[orbit] = True
        yield Graph.from_edges(n, [pairs[i] for i in bits])
        rest = np.flatnonzero(~covered[mask:])
        if rest.size == 0:
            break
        mask += int(rest[0])


def count_classes(n: int) -> int:
    """Number of unlabelled graphs on n vertices via the brute oracle."""
    return sum(1 for _ in brute_mask_generate(n))


__all__ = [
    "GenConstraints", "generate", "connected_graphs", "brute_mask_generate",
    "certificate", "canonical_form", "MAX_ORDER",
]
