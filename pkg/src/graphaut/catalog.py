"""Built-in graphs with fixed vertex and edge numbering.

Edge indices follow the incidence tables these graphs are usually
printed with: lexicographic (u, v) order everywhere except k4, whose
traditional triangle listing fixes the order (1,2),(1,4),(1,3),...
Renumbering any of these would silently shift every positional weight
vector, so the lists below are data, not derived.
"""
from __future__ import annotations

from .graph import Graph, GraphError


def _circulant(n: int, steps: tuple[int, ...]) -> list[tuple[int, int]]:
    edges = set()
    for u in range(1, n + 1):
        for s in steps:
            v = (u - 1 + s) % n + 1
            edges.add((min(u, v), max(u, v)))
    return sorted(edges)


def _complete(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]


def _complete_bipartite_alternating(k: int) -> list[tuple[int, int]]:
    # odd labels form one part, even labels the other
    return [(u, v) for u in range(1, 2 * k + 1) for v in range(u + 1, 2 * k + 1)
            if (u + v) % 2 == 1]


_EXPLICIT: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "k4": (4, [(1, 2), (1, 4), (1, 3), (2, 3), (2, 4), (3, 4)]),
    "k4_minus_e": (4, [(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]),
    "g2_ex12": (8, [(1, 2), (1, 4), (2, 3), (3, 4), (3, 5), (5, 6), (5, 8), (6, 7),
                    (7, 8)]),
    "g3_ex13": (6, [(1, 2), (1, 4), (1, 6), (2, 3), (2, 4), (2, 6), (3, 4), (3, 5),
                    (3, 6), (4, 5), (5, 6)]),
    "cube": (8, [(1, 2), (1, 4), (1, 5), (2, 3), (2, 6), (3, 4), (3, 7), (4, 8),
                 (5, 6), (5, 8), (6, 7), (7, 8)]),
    "octahedron": (6, [(1, 2), (1, 4), (1, 5), (1, 6), (2, 3), (2, 5), (2, 6),
                       (3, 4), (3, 5), (3, 6), (4, 5), (4, 6)]),
    "dodecahedron": (20, [(1, 2), (1, 5), (1, 6), (2, 3), (2, 8), (3, 4), (3, 10),
                          (4, 5), (4, 12), (5, 14), (6, 7), (6, 15), (7, 8), (7, 17),
                          (8, 9), (9, 10), (9, 18), (10, 11), (11, 12), (11, 19),
                          (12, 13), (13, 14), (13, 20), (14, 15), (15, 16), (16, 17),
                          (16, 20), (17, 18), (18, 19), (19, 20)]),
    "icosahedron": (12, [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 6),
                         (2, 8), (2, 9), (3, 4), (3, 9), (3, 10), (4, 5), (4, 10),
                         (4, 11), (5, 6), (5, 7), (5, 11), (6, 7), (6, 8), (7, 8),
                         (7, 11), (7, 12), (8, 9), (8, 12), (9, 10), (9, 12),
                         (10, 11), (10, 12), (11, 12)]),
    "frucht": (12, [(1, 2), (1, 3), (1, 12), (2, 3), (2, 10), (3, 4), (4, 5),
                    (4, 6), (5, 6), (5, 12), (6, 7), (7, 8), (7, 9), (8, 9),
                    (8, 11), (9, 10), (10, 11), (11, 12)]),
    "petersen": (10, [(1, 2), (1, 5), (1, 6), (2, 3), (2, 7), (3, 4), (3, 8),
                      (4, 5), (4, 9), (5, 10), (6, 8), (6, 9), (7, 9), (7, 10),
                      (8, 10)]),
    "shrikhande": (16, [(1, 2), (1, 3), (1, 7), (1, 8), (1, 10), (1, 16), (2, 3),
                        (2, 4), (2, 8), (2, 9), (2, 11), (3, 4), (3, 5), (3, 10),
                        (3, 12), (4, 5), (4, 6), (4, 11), (4, 13), (5, 6), (5, 7),
                        (5, 12), (5, 14), (6, 7), (6, 8), (6, 13), (6, 15), (7, 8),
                        (7, 14), (7, 16), (8, 9), (8, 15), (9, 11), (9, 12), (9, 14),
                        (9, 15), (10, 12), (10, 13), (10, 15), (10, 16), (11, 13),
                        (11, 14), (11, 16), (12, 14), (12, 15), (13, 15), (13, 16),
                        (14, 16)]),
    "rook4": (16, [(1, 2), (1, 3), (1, 10), (1, 12), (1, 15), (1, 16), (2, 3),
                   (2, 7), (2, 8), (2, 9), (2, 12), (3, 4), (3, 5), (3, 12),
                   (3, 14), (4, 5), (4, 9), (4, 10), (4, 11), (4, 14), (5, 6),
                   (5, 7), (5, 14), (5, 16), (6, 7), (6, 11), (6, 12), (6, 13),
                   (6, 16), (7, 8), (7, 9), (7, 16), (8, 9), (8, 13), (8, 14),
                   (8, 15), (9, 10), (9, 11), (10, 11), (10, 15), (10, 16),
                   (11, 12), (11, 13), (12, 13), (13, 14), (13, 15), (14, 15),
                   (15, 16)]),
}


def _build(name: str) -> Graph:
    if name in _EXPLICIT:
        n, edges = _EXPLICIT[name]
        return Graph(name, n, edges)
    if name == "k9":
        return Graph(name, 9, _complete(9))
    if name == "k44":
        return Graph(name, 8, _complete_bipartite_alternating(4))
    if name == "c10_13":
        return Graph(name, 10, _circulant(10, (1, 3)))
    if name == "c12_13":
        return Graph(name, 12, _circulant(12, (1, 3)))
    if name == "c10_12":
        return Graph(name, 10, _circulant(10, (1, 2)))
    raise GraphError(f"unknown catalog graph {name!r} (see catalog_names())")


_NAMES = (
    "k4", "k4_minus_e", "k9", "k44", "g2_ex12", "g3_ex13", "cube", "octahedron",
    "dodecahedron", "icosahedron", "frucht", "petersen", "c10_13", "c12_13",
    "c10_12", "shrikhande", "rook4",
)


def catalog_names() -> tuple[str, ...]:
    return _NAMES


def catalog(name: str) -> Graph:
    """Return the named built-in graph; raises GraphError for unknown names."""
    if name not in _NAMES:
        raise GraphError(f"unknown catalog graph {name!r} (see catalog_names())")
    return _build(name)
