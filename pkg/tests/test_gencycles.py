import pytest

from graphaut import (automorphisms_from_generating_cycles,
                      candidate_generating_cycles, catalog, dihedral_partial_maps,
                      enumerate_cycle_covers, enumerate_isometric_cycles,
                      extend_partial_map, group_closure, verify_permutation,
                      weight_classes)
from reference_data import (C10_12_UNIQUE_RIM, COVER_RULES, ICOSA_DECAGON,
                        OCTA_SQUARE, OCTAHEDRON_POLE_SWAP)


@pytest.mark.parametrize("name", sorted(COVER_RULES))
def test_cover_rule_counts(name, get_isocycles):
    k, length, nconfigs, ngens = COVER_RULES[name]
    g = catalog(name)
    configs, gens = enumerate_cycle_covers(g, get_isocycles(name), k, length)
    assert len(configs) == nconfigs
    assert len(gens) == ngens
    for q in gens:
        assert q.cycle.length == g.n  # spanning
        assert all(len(s) == k for s in q.producers)
    assert sum(len(q.producers) for q in gens) == nconfigs


def test_cover_rule_k44_matches_spanning_cycle_count():
    from graphaut import count_spanning_cycles
    g = catalog("k44")
    _, gens = enumerate_cycle_covers(g, enumerate_isometric_cycles(g), 3, 4)
    assert len(gens) == count_spanning_cycles(g) == 72


def test_c10_12_full_dihedral_rim_unique():
    g = catalog("c10_12")
    iso = enumerate_isometric_cycles(g)
    configs, gens = enumerate_cycle_covers(g, iso, 6, 0, full_dihedral=True)
    assert len(gens) == 1
    assert set(gens[0].cycle.edges.indices()) == C10_12_UNIQUE_RIM
    # the rim arises from exactly two complementary producer subsets
    assert len(gens[0].producers) == 2
    a, b = (set(s) for s in gens[0].producers)
    assert a & b == set() and a | b == set(range(1, 13))
    # without the symmetry filter many spanning decagons qualify
    _, plain = enumerate_cycle_covers(g, iso, 6, 0)
    assert len(plain) == 46


def test_cover_budget():
    from graphaut import BudgetExceededError
    g = catalog("shrikhande")
    iso = enumerate_isometric_cycles(g)
    with pytest.raises(BudgetExceededError):
        enumerate_cycle_covers(g, iso, 6, 0, budget=1000)


def test_candidates_k4_singletons_are_the_triangles():
    g = catalog("k4")
    got = candidate_generating_cycles(g, max_subset=1)
    assert len(got) == 4
    assert all(q.cycle.length == 3 for q in got)
    assert all(q.producers == ((i,),) for i, q in enumerate(got, start=1))


def test_candidates_octahedron_squares_have_two_disjoint_producers():
    g = catalog("octahedron")
    got = candidate_generating_cycles(g, max_subset=4)
    squares = {frozenset(q.cycle.edges.indices()): q for q in got if q.cycle.length == 4}
    target = squares[frozenset(OCTA_SQUARE)]
    quads = [set(s) for s in target.producers if len(s) == 4]
    # the two printed four-triangle decompositions, disjoint from each other
    assert any(a.isdisjoint(b) and a | b == set(range(1, 9))
               for a in quads for b in quads if a != b)


def test_candidates_icosahedron_decagons_need_ten_cycles():
    """Each fully symmetric decagon is a ring sum of ten triangles (the
    faces of one cap); no subset of six or fewer isometric cycles can
    produce it, so the default budget keeps triangles and shorter sums
    and the decagons appear at max_subset=10."""
    g = catalog("icosahedron")
    got6 = candidate_generating_cycles(g, max_subset=6)
    assert not any(q.cycle.length == 10 for q in got6)
    got10 = candidate_generating_cycles(g, max_subset=10, budget=10**8)
    decagons = {frozenset(q.cycle.edges.indices()): q for q in got10
                if q.cycle.length == 10}
    target = decagons[frozenset(ICOSA_DECAGON)]
    # exactly the two cap decompositions, ten faces each, using all twenty
    assert all(len(s) == 10 for s in target.producers)
    assert len(target.producers) == 2
    a, b = (set(s) for s in target.producers)
    assert a.isdisjoint(b) and a | b == set(range(1, 21))


def test_candidates_stay_inside_one_weight_class():
    for name in ("frucht", "g2_ex12", "g3_ex13"):
        g = catalog(name)
        part = weight_classes(g)
        for q in candidate_generating_cycles(g, max_subset=3):
            holder = part.class_of(q.cycle.vertices[0])
            assert set(q.cycle.vertices) <= set(holder.vertices)


def test_candidates_frucht_empty():
    # no cycle of the identity graph stays inside one weight class
    assert candidate_generating_cycles(catalog("frucht")) == []


def test_dihedral_map_counts():
    g = catalog("petersen")
    iso = enumerate_isometric_cycles(g)
    maps = dihedral_partial_maps(iso.cycles[0])
    assert len(maps) == 10
    assert maps[0] == {v: v for v in iso.cycles[0].vertices}
    g = catalog("k4")
    assert len(dihedral_partial_maps(enumerate_isometric_cycles(g).cycles[0])) == 6
    g = catalog("k44")
    quad = enumerate_isometric_cycles(g).cycles[0]
    assert len(dihedral_partial_maps(quad)) == 8
    g = catalog("c10_12")
    from graphaut import as_cycle
    rim = as_cycle(g, g.edge_set(sorted(C10_12_UNIQUE_RIM)))
    assert len(dihedral_partial_maps(rim)) == 20


def test_dihedral_maps_form_a_group_on_the_cycle():
    g = catalog("petersen")
    cyc = enumerate_isometric_cycles(g).cycles[0]
    maps = dihedral_partial_maps(cyc)
    as_tuples = {tuple(sorted(m.items())) for m in maps}
    assert len(as_tuples) == 10
    for a in maps:
        for b in maps:
            composed = tuple(sorted((v, a[b[v]]) for v in b))
            assert composed in as_tuples


def test_extend_k4_rotation():
    g = catalog("k4")
    part = weight_classes(g)
    pm = {1: 2, 2: 3, 3: 1}
    got = extend_partial_map(g, part, pm)
    assert [p.images for p in got] == [(2, 3, 1, 4)]


def test_extend_octahedron_identity_square_two_completions():
    g = catalog("octahedron")
    part = weight_classes(g)
    pm = {1: 1, 2: 2, 3: 3, 4: 4}
    got = extend_partial_map(g, part, pm)
    assert {p.images for p in got} == {tuple(range(1, 7)), OCTAHEDRON_POLE_SWAP}


def test_extend_petersen_outer_rotation():
    g = catalog("petersen")
    part = weight_classes(g)
    pm = {1: 2, 2: 3, 3: 4, 4: 5, 5: 1}
    got = extend_partial_map(g, part, pm)
    assert [p.images for p in got] == [(2, 3, 4, 5, 1, 7, 8, 9, 10, 6)]


def test_extend_rejects_non_injective():
    g = catalog("k4")
    with pytest.raises(ValueError):
        extend_partial_map(g, weight_classes(g), {1: 2, 2: 2, 3: 1})


def test_extend_returns_empty_for_impossible_seed():
    g = catalog("frucht")
    part = weight_classes(g)
    assert extend_partial_map(g, part, {1: 3, 3: 1, 2: 2}) == []


def test_extension_results_verify():
    g = catalog("octahedron")
    part = weight_classes(g)
    for q in candidate_generating_cycles(g, max_subset=2):
        for pm in dihedral_partial_maps(q):
            for p in extend_partial_map(g, part, pm):
                assert verify_permutation(g, p)


def test_spectral_k4():
    spec = automorphisms_from_generating_cycles(catalog("k4"))
    assert spec.by_length[3] == (4, 24)  # four triangles, six maps, one extension
    assert len(spec.distinct) == 24
    assert spec.raw_count >= 24


def test_spectral_petersen():
    spec = automorphisms_from_generating_cycles(catalog("petersen"))
    assert spec.by_length[5] == (12, 120)
    assert len(spec.distinct) == 120
    assert group_closure(list(spec.distinct)).order == 120


def test_spectral_distinct_subset_of_oracle(get_oracle):
    for name in ("k4", "octahedron", "c10_12"):
        spec = automorphisms_from_generating_cycles(catalog(name))
        group = get_oracle(name).group
        for p in spec.distinct:
            assert p in group
