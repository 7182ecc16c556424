"""Vertex partitions: weight classes, orbits, and the transposition search.

Equal vertex weight is a necessary condition for two vertices to share
an orbit, so the weight partition is the cheap surrogate the search
machinery prunes with; the brute-force oracle supplies the true orbits
it is checked against.
"""
from __future__ import annotations

from dataclasses import dataclass

from .cutspectrum import WeightTable, edge_weights
from .graph import Graph
from .perms import Permutation, PermutationGroup


@dataclass(frozen=True)
class VertexClass:
    vertices: tuple[int, ...]
    weight: int | None = None
    degree: int | None = None


@dataclass(frozen=True)
class VertexPartition:
    """Disjoint vertex classes covering 1..n.

    Ordered by descending weight, then by smallest member; classes
    without weights (pure orbit partitions) sort by smallest member.
    """

    classes: tuple[VertexClass, ...]

    def __iter__(self):
        return iter(self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def class_of(self, v: int) -> VertexClass:
        for c in self.classes:
            if v in c.vertices:
                return c
        raise KeyError(v)

    def as_sets(self) -> set[frozenset[int]]:
        return {frozenset(c.vertices) for c in self.classes}

    def refines_or_equals(self, coarser: "VertexPartition") -> bool:
        """Every class here lies inside a single class of the other."""
        for mine in self.classes:
            holder = coarser.class_of(mine.vertices[0])
            if not set(mine.vertices) <= set(holder.vertices):
                return False
        return True


def _ordered(classes: list[VertexClass]) -> VertexPartition:
    key = lambda c: (-(c.weight or 0), min(c.vertices))
    return VertexPartition(classes=tuple(sorted(classes, key=key)))


def weight_classes(g: Graph, wt: WeightTable | None = None) -> VertexPartition:
    """Vertices grouped by exact vertex weight, split again by degree."""
    if wt is None:
        wt = edge_weights(g)
    buckets: dict[tuple[int, int], list[int]] = {}
    for v in g.vertices():
        buckets.setdefault((wt.vertex_weight(v), g.degree(v)), []).append(v)
    classes = [VertexClass(vertices=tuple(sorted(vs)), weight=w, degree=d)
               for (w, d), vs in buckets.items()]
    return _ordered(classes)


def verify_permutation(g: Graph, p: Permutation) -> bool:
    """True iff p maps every neighbourhood onto the image's neighbourhood.

    This is the row-by-row relabel-and-compare check on the adjacency
    structure: p(N(v)) must equal N(p(v)) as a set, for every vertex.
    """
    if p.degree != g.n:
        raise ValueError(f"permutation degree {p.degree} != vertex count {g.n}")
    for v in g.vertices():
        if {p(w) for w in g.adjacency[v]} != set(g.adjacency[p(v)]):
            return False
    return True


def orbit_subset_count(k: int) -> int:
    """Number of nonempty class subsets to try: 2**k - 1."""
    if k < 0:
        raise ValueError("class count must be nonnegative")
    return 2**k - 1


def pairwise_transposition_automorphisms(g: Graph,
                                         part: VertexPartition | None = None) -> list[Permutation]:
    """Automorphisms made of swaps of the two-vertex weight classes.

    Tries every combination of the size-2 classes (2**k cases including
    the identity); vertices in classes of any other size stay fixed.
    The identity comes first, then lexicographic image order.
    """
    if part is None:
        part = weight_classes(g)
    pairs = [c.vertices for c in part.classes if len(c.vertices) == 2]
    found = []
    for picks in range(1 << len(pairs)):
        images = list(range(g.n + 1))
        for i, (a, b) in enumerate(pairs):
            if picks >> i & 1:
                images[a], images[b] = b, a
        p = Permutation(tuple(images[1:]))
        if verify_permutation(g, p):
            found.append(p)
    return sorted(found)


def group_orbits(grp: PermutationGroup, g: Graph | None = None,
                 wt: WeightTable | None = None) -> VertexPartition:
    """Orbits of the group action on 1..degree.

    When a graph is supplied, each orbit is tagged with its common
    weight and degree so partitions compare cleanly.
    """
    n = grp.degree
    seen = [False] * (n + 1)
    classes = []
    if g is not None and wt is None:
        wt = edge_weights(g)
    for v in range(1, n + 1):
        if seen[v]:
            continue
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for p in grp:
                y = p(x)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        weight = degree = None
        if g is not None and wt is not None:
            weight = wt.vertex_weight(v)
            degree = g.degree(v)
        classes.append(VertexClass(vertices=tuple(sorted(orbit)),
                                   weight=weight, degree=degree))
    return _ordered(classes)


def edge_image_preserved(g: Graph, p: Permutation) -> bool:
    """Independent check used against verify_permutation: p maps the
    edge set onto itself."""
    edges = {frozenset(e) for e in g.edges}
    return all(frozenset((p(u), p(v))) in edges for u, v in g.edges)
