import random
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_connected
from histlab.classify import Fragment
from histlab.constructions import antiprism, complete, cycle, fragment_f1, g_k, path
from histlab.graph import Graph
from histlab.oracles import brute_force_hists, count_hists_exchange, kirchhoff_count
from histlab.search import (
    count_hists,
    count_spanning_trees_search,
    enumerate_excluded_hists,
    enumerate_split_hisfs,
    find_hist,
    has_hist,
    is_hist,
    is_split_hisf,
    run_search,
)

OCTAHEDRON = antiprism(3).graph


def test_count_examples():
    assert count_hists(OCTAHEDRON) == 24
    assert count_hists(complete(3)) == 0
    assert count_hists(complete(2)) == 1
    assert count_hists(complete(4)) == 4
    assert count_hists(antiprism(4).graph) == 48


def test_degenerate_inputs():
    assert count_hists(Graph(0)) == 0
    assert count_hists(Graph(1)) == 1
    assert count_hists(Graph(2)) == 0
    two_triangles = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert count_hists(two_triangles) == 0


def test_has_hist_examples():
    assert not has_hist(g_k(4).graph)
    assert has_hist(OCTAHEDRON)
    for n in range(3, 12):
        assert not has_hist(cycle(n))


def test_find_hist_examples():
    assert find_hist(complete(2)) == frozenset({(0, 1)})
    assert find_hist(complete(3)) is None
    tree = find_hist(OCTAHEDRON)
    degrees = Counter(v for e in tree for v in e)
    assert sorted(degrees.values()) == [1, 1, 1, 1, 3, 3]
    assert is_hist(OCTAHEDRON, tree)


def _named(f: Fragment, text: str) -> frozenset:
    out = set()
    for item in text.split():
        a, b = item.split("-")
        u, v = f.labels[a], f.labels[b]
        out.add((min(u, v), max(u, v)))
    return frozenset(out)


def test_f1_excluded_hists_are_the_two_known_trees():
    f = fragment_f1()
    trees = enumerate_excluded_hists(f)
    expected = {
        _named(f, "x-v_3 x-v_6 y-v_1 y-v_4 v_1-v_2 v_1-v_6 v_5-v_6"),
        _named(f, "x-v_3 x-v_6 y-v_1 y-v_4 v_2-v_3 v_3-v_4 v_4-v_5"),
    }
    assert set(trees) == expected and len(trees) == 2
    for t in trees:
        degrees = Counter(v for e in t for v in e)
        assert degrees[f.x] == 2 and degrees[f.y] == 2


def test_excluded_hists_of_p3_is_empty():
    assert enumerate_excluded_hists(Fragment(path(3), 0, 2)) == []


def test_split_hisfs():
    f = fragment_f1()
    assert enumerate_split_hisfs(f) == []
    assert enumerate_split_hisfs(f.delete(f.labels["v_2"]))
    p4 = Fragment(path(4), 0, 3)
    forests = enumerate_split_hisfs(p4)
    assert forests == [(frozenset({(0, 1)}), frozenset({(2, 3)}))]


def test_enumeration_order_is_deterministic():
    f = fragment_f1()
    assert enumerate_excluded_hists(f) == enumerate_excluded_hists(f)


def _sample(seed: int, count: int, sizes=range(2, 10)):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.choice(list(sizes))
        yield random_connected(rng, n, rng.randrange(0, 2 * n))


def test_search_agrees_with_oracles_on_random_graphs():
    for g in _sample(1, 500):
        c = count_hists(g)
        assert c == brute_force_hists(g) == count_hists_exchange(g), g


def test_spanning_tree_degeneration():
    for g in _sample(2, 200):
        assert count_spanning_trees_search(g) == kirchhoff_count(g), g


def test_witness_soundness():
    for g in _sample(3, 60):
        exempt = tuple(range(g.n))[: g.n // 3]
        trees = run_search(g, exempt, record=10_000)[2]
        for t in trees:
            assert is_hist(g, t, exempt)
        if g.n >= 4:
            x, y = 0, g.n - 1
            if not g.has_edge(x, y):
                for tx, ty in enumerate_split_hisfs(Fragment(g, x, y)):
                    assert is_split_hisf(g, tx | ty, x, y)


@st.composite
def connected_graphs(draw):
    seed = draw(st.integers(0, 2**32 - 1))
    rng = random.Random(seed)
    n = draw(st.integers(2, 9))
    return random_connected(rng, n, draw(st.integers(0, 2 * n)))


@settings(max_examples=150, deadline=None)
@given(connected_graphs(), st.integers(1, 30), st.data())
def test_stop_after_is_min(g, s, data):
    exempt = data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
    assert count_hists(g, exempt, stop_after=s) == min(s, count_hists(g, exempt))


@settings(max_examples=150, deadline=None)
@given(connected_graphs(), st.data())
def test_exempt_monotone(g, data):
    small = data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
    large = small | data.draw(st.sets(st.integers(0, g.n - 1), max_size=2))
    assert count_hists(g, small) <= count_hists(g, large)


def test_counts_are_python_ints():
    assert type(count_hists(OCTAHEDRON)) is int


@pytest.mark.parametrize("k", range(3, 9))
def test_min_degree_requirement(k):
    # no HIST of an antiprism has a 4-vertex
    g = antiprism(k).graph
    for v in range(g.n):
        assert run_search(g, min_degree={v: 4})[0] == 0
