import random
from itertools import permutations as iter_permutations

import pytest

from graphaut import (BudgetExceededError, Graph, Permutation, catalog,
                      count_spanning_cycles, enumerate_automorphisms,
                      true_orbits, verify_permutation)
from reference_data import ORACLE_ORDERS


@pytest.mark.parametrize("name", sorted(ORACLE_ORDERS))
def test_oracle_orders(name):
    res = enumerate_automorphisms(catalog(name))
    assert not res.truncated
    assert res.order == ORACLE_ORDERS[name]


def test_every_oracle_element_is_an_automorphism():
    for name in ("g3_ex13", "frucht", "octahedron", "petersen"):
        g = catalog(name)
        res = enumerate_automorphisms(g)
        for p in res.group:
            assert verify_permutation(g, p)


def test_oracle_matches_full_filtration_on_small_graphs():
    # second, dumber oracle: filter all n! bijections
    for name in ("k4", "k4_minus_e", "g3_ex13", "octahedron", "cube", "g2_ex12", "k44"):
        g = catalog(name)
        dumb = {
            images for images in iter_permutations(range(1, g.n + 1))
            if verify_permutation(g, Permutation(images))
        }
        fast = {p.images for p in enumerate_automorphisms(g).group}
        assert fast == dumb, name


def test_pruning_does_not_change_the_result():
    for name in ("g3_ex13", "petersen", "frucht", "c10_12"):
        g = catalog(name)
        with_pruning = enumerate_automorphisms(g, prune=True)
        without = enumerate_automorphisms(g, prune=False)
        assert with_pruning.group.elements == without.group.elements


def test_oracle_invariant_under_relabelling():
    rng = random.Random(11)
    for name in ("frucht", "petersen", "g3_ex13"):
        g = catalog(name)
        relabel = list(g.vertices())
        rng.shuffle(relabel)
        mapping = {v: relabel[v - 1] for v in g.vertices()}
        h = Graph("shuffled", g.n, [(mapping[u], mapping[v]) for u, v in g.edges])
        assert enumerate_automorphisms(h).order == enumerate_automorphisms(g).order


def test_oracle_cap_truncates():
    res = enumerate_automorphisms(catalog("k4"), cap=5)
    assert res.truncated
    assert res.order == 5  # partial collection, not a group


def test_true_orbits_examples():
    assert {frozenset(c.vertices) for c in true_orbits(catalog("k4_minus_e"))} == {
        frozenset({1, 3}), frozenset({2, 4})}
    petersen = true_orbits(catalog("petersen"))
    assert len(petersen) == 1
    frucht = true_orbits(catalog("frucht"))
    assert len(frucht) == 12


def test_count_spanning_cycles_k4():
    assert count_spanning_cycles(catalog("k4")) == 3


def test_count_spanning_cycles_k44():
    # 4! * 3! / 2 spanning cycles of the balanced complete bipartite graph
    assert count_spanning_cycles(catalog("k44")) == 72


def test_count_spanning_cycles_c10_12_contains_rim():
    from reference_data import C10_12_UNIQUE_RIM

    g = catalog("c10_12")
    count = count_spanning_cycles(g)
    assert count >= 1
    # the fully symmetric rim really is a spanning cycle of this graph
    from graphaut import as_cycle
    rim = as_cycle(g, g.edge_set(sorted(C10_12_UNIQUE_RIM)))
    assert rim is not None and rim.length == 10


def test_count_spanning_cycles_bound():
    g = Graph("big", 17, [(i, i + 1) for i in range(1, 17)] + [(17, 1)])
    with pytest.raises(BudgetExceededError):
        count_spanning_cycles(g)


def test_count_spanning_cycles_cycle_graph():
    g = Graph("c7", 7, [(i, i % 7 + 1) for i in range(1, 8)])
    assert count_spanning_cycles(g) == 1
