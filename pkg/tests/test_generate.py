import random

import pytest

from histlab.generate import (
    GenConstraints,
    brute_mask_generate,
    canonical_form,
    certificate,
    connected_graphs,
    generate,
)
from histlab.graph import SizeError, to_graph6


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112), (7, 853)])
def test_connected_counts(n, expected):
    assert sum(1 for _ in connected_graphs(n)) == expected


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
def test_all_graph_counts(n, expected):
    assert sum(1 for _ in generate(GenConstraints(order=n))) == expected


def test_mask_oracle_small_counts():
    four = list(brute_mask_generate(4))
    assert len(four) == 11
    assert sum(g.is_connected() for g in four) == 6
    assert len(list(brute_mask_generate(3))) == 4
    with pytest.raises(SizeError):
        next(brute_mask_generate(8))


@pytest.mark.parametrize("n", range(1, 7))
def test_generator_matches_mask_oracle(n):
    oracle = {certificate(g) for g in brute_mask_generate(n)}
    ours = [certificate(g) for g in generate(GenConstraints(order=n))]
    assert len(ours) == len(set(ours))
    assert set(ours) == oracle


def test_mask_oracle_representatives_are_pairwise_non_isomorphic():
    certs = [certificate(g) for g in brute_mask_generate(7)]
    assert len(certs) == len(set(certs)) == 1044


def test_isomorph_freeness_order_8():
    certs = [certificate(g) for g in connected_graphs(8)]
    assert len(certs) == len(set(certs)) == 11117


CONSTRAINT_CASES = [
    GenConstraints(order=7, connectivity_min=2),
    GenConstraints(order=8, connectivity_min=3),
    GenConstraints(order=8, girth_min=4, connectivity_min=1),
    GenConstraints(order=9, girth_min=5),
    GenConstraints(order=8, min_degree=3, max_degree=4),
    GenConstraints(order=8, regular_k=3, connectivity_min=1),
    GenConstraints(order=8, planar_only=True, connectivity_min=1),
    GenConstraints(order=9, planar_only=True, connectivity_min=4, min_degree=4),
]


@pytest.mark.parametrize("c", CONSTRAINT_CASES, ids=lambda c: repr(c))
def test_outputs_satisfy_constraints(c):
    out = list(generate(c))
    assert out
    assert all(c.accepts(g) for g in out)
    certs = [certificate(g) for g in out]
    assert len(certs) == len(set(certs))


@pytest.mark.parametrize("c", [
    GenConstraints(order=7, connectivity_min=2),
    GenConstraints(order=7, girth_min=4),
    GenConstraints(order=7, girth_min=5, connectivity_min=1),
    GenConstraints(order=7, min_degree=2, max_degree=3),
    GenConstraints(order=6, regular_k=3),
    GenConstraints(order=7, planar_only=True),
    GenConstraints(order=7, connectivity_min=3),
], ids=lambda c: repr(c))
def test_constrained_generation_is_complete(c):
    """Pruned generation equals unconstrained generation filtered afterwards."""
    pruned = {certificate(g) for g in generate(c)}
    filtered = {certificate(g) for g in generate(GenConstraints(order=c.order)) if c.accepts(g)}
    assert pruned == filtered


def test_known_constrained_counts():
    # cubic connected graphs on 4..10 vertices, 2-connected graphs on 5..7
    assert [sum(1 for _ in generate(GenConstraints(order=n, regular_k=3, connectivity_min=1)))
            for n in (4, 6, 8, 10)] == [1, 2, 5, 19]
    assert [sum(1 for _ in generate(GenConstraints(order=n, connectivity_min=2)))
            for n in (3, 4, 5, 6, 7)] == [1, 3, 10, 56, 468]


def test_infeasible_constraints_give_empty_stream():
    assert list(generate(GenConstraints(order=5, regular_k=3))) == []
    assert list(generate(GenConstraints(order=4, min_degree=3, max_degree=2))) == []


def test_order_ceiling():
    with pytest.raises(SizeError):
        generate(GenConstraints(order=12))


def test_deterministic_order():
    a = [to_graph6(g) for g in generate(GenConstraints(order=7, connectivity_min=2))]
    b = [to_graph6(g) for g in generate(GenConstraints(order=7, connectivity_min=2))]
    assert a == b


def test_canonical_form_identifies_isomorphs():
    rng = random.Random(1)
    for g in brute_mask_generate(5):
        perm = list(range(5))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))
        assert certificate(g) == certificate(g.relabel(perm))
    c4 = next(iter(generate(GenConstraints(order=4, regular_k=2))))
    assert certificate(c4) != certificate(c4.remove_edge(0, c4.neighbors(0)[0]))
