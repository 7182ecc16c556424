"""Structural properties checked across the whole catalog.

The invariance checks under large groups use a sound shortcut: a family
is invariant under every element of a group as soon as it is invariant
under a subset that composes to the whole group, and uniform weight
vectors are invariant under any bijection at all.  Where a shortcut
fires, the assertions that justify it run first.
"""
import random
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graph, isocycles, oracle
from graphaut import (Permutation, catalog_names, cycle_notation,
                      edge_image_preserved, edge_weights, group_orbits,
                      is_isometric, parse_permutation, second_level,
                      second_level_by_parity, verify_permutation, weight_classes)

ALL = sorted(catalog_names())
SMALL_GROUPS = [n for n in ALL if n != "k9"]  # the 9!-element group gets shortcuts


@pytest.mark.parametrize("name", ALL)
def test_second_level_paths_agree(name):
    g = graph(name)
    for e in range(1, g.m + 1):
        assert second_level(g, e) == second_level_by_parity(g, e)


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_weights_invariant_under_every_automorphism(name):
    g = graph(name)
    wt = edge_weights(g)
    for p in oracle(name).group:
        for v in g.vertices():
            assert wt.vertex_weight(p(v)) == wt.vertex_weight(v)
        for e in range(1, g.m + 1):
            u, v = g.endpoints(e)
            image = g.edge_number(p(u), p(v))
            assert image is not None
            assert wt.edge_weight(image) == wt.edge_weight(e)


def test_weights_invariant_k9_by_uniformity():
    # all weights equal, so any bijection preserves them
    wt = edge_weights(graph("k9"))
    assert len(set(wt.edge_weights)) == 1
    assert len(set(wt.vertex_weights)) == 1


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_isometric_cycles_closed_under_automorphisms(name):
    g = graph(name)
    sets = {c.edges for c in isocycles(name)}
    for p in oracle(name).group:
        for c in isocycles(name):
            image = g.edge_set([g.edge_number(p(u), p(v))
                                for u, v in zip(c.vertices,
                                                c.vertices[1:] + c.vertices[:1])])
            assert image in sets


def test_isometric_cycles_k9_are_all_triangles():
    # every 3-subset of the complete graph; closure under any bijection
    # is then immediate, covering the 9!-element group
    g = graph("k9")
    got = {frozenset(c.vertices) for c in isocycles("k9")}
    assert len(got) == 84 and all(len(s) == 3 for s in got)
    assert oracle("k9").order == factorial(9)


@pytest.mark.parametrize("name", ALL)
def test_weight_classes_contain_true_orbits(name):
    res = oracle(name)
    part = weight_classes(graph(name))
    assert res.orbits.refines_or_equals(part)


@pytest.mark.parametrize("name", ALL)
def test_verify_equals_edge_preservation_on_random_bijections(name):
    g = graph(name)
    rng = random.Random(hash(name) & 0xFFFF)
    base = list(g.vertices())
    for _ in range(1000):
        rng.shuffle(base)
        p = Permutation(tuple(base))
        assert verify_permutation(g, p) == edge_image_preserved(g, p)


@pytest.mark.parametrize("name", [n for n in ALL if n != "k9"])
def test_cayley_tables_are_latin_squares(name):
    from graphaut import cayley_table

    grp = oracle(name).group
    table = cayley_table(grp, cap=1200)
    k = table.order
    want = list(range(k))
    for i in range(k):
        assert sorted(table.cells[i]) == want
        assert table.cells[0][i] == i and table.cells[i][0] == i
    # columns of a few sampled indices (full column scan is quadratic)
    for j in (0, k // 2, k - 1):
        assert sorted(row[j] for row in table.cells) == want


def test_cayley_table_k9_exceeds_cap():
    from graphaut import BudgetExceededError, cayley_table

    with pytest.raises(BudgetExceededError):
        cayley_table(oracle("k9").group)


@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_cycle_notation_round_trip_on_group_elements(name):
    for p in oracle(name).group:
        text = cycle_notation(p, include_fixed=True)
        assert parse_permutation(text, p.degree) == p


@given(st.permutations(range(1, 10)))
@settings(max_examples=200)
def test_cycle_notation_round_trip_random(images):
    p = Permutation(tuple(images))
    assert parse_permutation(cycle_notation(p, include_fixed=True), 9) == p
    assert parse_permutation(cycle_notation(p), 9) == p


@given(st.permutations(range(1, 9)), st.permutations(range(1, 9)))
@settings(max_examples=200)
def test_compose_apply_agree(a_images, b_images):
    a, b = Permutation(tuple(a_images)), Permutation(tuple(b_images))
    c = a.compose(b)
    for v in range(1, 9):
        assert c(v) == a(b(v))


@pytest.mark.parametrize("name", ["octahedron", "petersen", "c10_12", "frucht"])
def test_enumeration_stability(name):
    a = [c.edges.indices() for c in isocycles(name)]
    from graphaut import enumerate_isometric_cycles
    b = [c.edges.indices() for c in enumerate_isometric_cycles(graph(name))]
    assert a == b


@pytest.mark.parametrize("name", ALL)
def test_oracle_group_is_closed_on_samples(name):
    grp = oracle(name).group
    rng = random.Random(3)
    elems = grp.elements
    for _ in range(min(200, len(elems) ** 2)):
        a = elems[rng.randrange(len(elems))]
        b = elems[rng.randrange(len(elems))]
        assert a.compose(b) in grp


def test_ring_sum_of_vertex_sharing_cycles():
    """Joining two edge-disjoint cycles that share one vertex gives a
    degree-4 vertex, so the union is not a cycle; edge-disjoint cycles
    sharing nothing stay disconnected."""
    from graphaut import Graph, as_cycle, why_not_cycle

    g = Graph("bowtie", 5, [(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    left = g.edge_set([1, 2, 3])
    right = g.edge_set([4, 5, 6])
    assert as_cycle(g, left ^ right) is None
    assert "degree" in why_not_cycle(g, left ^ right)
