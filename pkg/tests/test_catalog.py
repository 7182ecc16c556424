import pytest

from graphaut import GraphError, catalog, catalog_names

# (n, m) straight from the printed incidence data
SIZES = {
    "k4": (4, 6), "k4_minus_e": (4, 5), "k9": (9, 36), "k44": (8, 16),
    "g2_ex12": (8, 9), "g3_ex13": (6, 11), "cube": (8, 12), "octahedron": (6, 12),
    "dodecahedron": (20, 30), "icosahedron": (12, 30), "frucht": (12, 18),
    "petersen": (10, 15), "c10_13": (10, 20), "c12_13": (12, 24),
    "c10_12": (10, 20), "shrikhande": (16, 48), "rook4": (16, 48),
}


def test_all_names_have_sizes():
    assert set(catalog_names()) == set(SIZES)


@pytest.mark.parametrize("name", sorted(SIZES))
def test_sizes(name):
    g = catalog(name)
    assert (g.n, g.m) == SIZES[name]


def test_unknown_name():
    with pytest.raises(GraphError, match="unknown catalog graph"):
        catalog("nope")


def test_octahedron_adjacency_matches_listing():
    g = catalog("octahedron")
    listing = {1: {2, 4, 5, 6}, 2: {1, 3, 5, 6}, 3: {2, 4, 5, 6},
               4: {1, 3, 5, 6}, 5: {1, 2, 3, 4}, 6: {1, 2, 3, 4}}
    for v, nbrs in listing.items():
        assert set(g.adjacency[v]) == nbrs


def test_octahedron_incidence_order():
    g = catalog("octahedron")
    assert g.edges[:4] == ((1, 2), (1, 4), (1, 5), (1, 6))
    assert g.edges[7] == (3, 4) and g.edges[11] == (4, 6)


def test_frucht_adjacency_matches_listing():
    g = catalog("frucht")
    listing = {1: {2, 3, 12}, 2: {1, 3, 10}, 3: {1, 2, 4}, 4: {3, 5, 6},
               5: {4, 6, 12}, 6: {4, 5, 7}, 7: {6, 8, 9}, 8: {7, 9, 11},
               9: {7, 8, 10}, 10: {2, 9, 11}, 11: {8, 10, 12}, 12: {1, 5, 11}}
    for v, nbrs in listing.items():
        assert set(g.adjacency[v]) == nbrs


def test_dodecahedron_spot_checks():
    g = catalog("dodecahedron")
    assert g.endpoints(10) == (5, 14)
    assert g.endpoints(22) == (13, 14)
    assert set(g.adjacency[20]) == {13, 16, 19}


def test_icosahedron_spot_checks():
    g = catalog("icosahedron")
    assert set(g.adjacency[1]) == {2, 3, 4, 5, 6}
    assert set(g.adjacency[12]) == {7, 8, 9, 10, 11}
    assert g.endpoints(16) == (5, 6) and g.endpoints(30) == (11, 12)


def test_petersen_is_outer_cycle_spokes_pentagram():
    g = catalog("petersen")
    assert set(g.adjacency[1]) == {2, 5, 6}
    assert set(g.adjacency[6]) == {1, 8, 9}
    assert g.edges[0] == (1, 2) and g.edges[14] == (8, 10)


def test_k44_parts_are_odd_and_even():
    g = catalog("k44")
    for v in (1, 3, 5, 7):
        assert set(g.adjacency[v]) == {2, 4, 6, 8}
    assert g.edges[0] == (1, 2) and g.edges[15] == (7, 8)


def test_shrikhande_adjacency_row():
    g = catalog("shrikhande")
    assert set(g.adjacency[1]) == {2, 3, 7, 8, 10, 16}
    assert set(g.adjacency[9]) == {2, 8, 11, 12, 14, 15}
    assert g.endpoints(33) == (9, 11)


def test_rook4_adjacency_row():
    g = catalog("rook4")
    assert set(g.adjacency[1]) == {2, 3, 10, 12, 15, 16}
    assert set(g.adjacency[13]) == {6, 8, 11, 12, 14, 15}


def test_circulant_catalog_graphs():
    g = catalog("c10_12")
    for v in g.vertices():
        want = {(v - 1 + s) % 10 + 1 for s in (1, 2, 8, 9)}
        assert set(g.adjacency[v]) == want
    g = catalog("c10_13")
    assert set(g.adjacency[1]) == {2, 4, 8, 10}
    g = catalog("c12_13")
    assert set(g.adjacency[1]) == {2, 4, 10, 12}


def test_g3_adjacency_matches_structural_numbers():
    g = catalog("g3_ex13")
    listing = {1: {2, 4, 6}, 2: {1, 3, 4, 6}, 3: {2, 4, 5, 6},
               4: {1, 2, 3, 5}, 5: {3, 4, 6}, 6: {1, 2, 3, 5}}
    for v, nbrs in listing.items():
        assert set(g.adjacency[v]) == nbrs


def test_g2_routes_exist():
    g = catalog("g2_ex12")
    assert set(g.adjacency[3]) == {2, 4, 5}
    assert set(g.adjacency[5]) == {3, 6, 8}
    assert g.edge_number(3, 5) == 5  # the single bridge between the halves
