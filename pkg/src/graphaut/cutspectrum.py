"""Two-level edge-cut weights and the sorted invariant fingerprints.

The base cut of an edge (u, v) is star(u) xor star(v): every edge
adjacent to it.  The second level repeats the construction once, as the
ring sum of the base cuts of all edges in the base cut; equivalently it
is the cut of the vertex set touched an odd number of times by the base
cut.  An edge's weight is the size of its base cut plus the size of its
second level; a vertex weight sums the weights of its incident edges.
Exactly two levels are computed.
"""
from __future__ import annotations

from dataclasses import dataclass

from .graph import EdgeSet, Graph, star


@dataclass(frozen=True)
class WeightTable:
    """Per-edge and per-vertex weights plus their sorted fingerprints."""

    edge_weights: tuple[int, ...]
    vertex_weights: tuple[int, ...]
    edge_fingerprint: tuple[int, ...]
    vertex_fingerprint: tuple[int, ...]
    levels: int = 2

    def edge_weight(self, e: int) -> int:
        return self.edge_weights[e - 1]

    def vertex_weight(self, v: int) -> int:
        return self.vertex_weights[v - 1]


def base_cut(g: Graph, e: int) -> EdgeSet:
    """star(u) xor star(v) for e = (u, v): all edges adjacent to e.

    Never contains e itself; its size is deg(u) + deg(v) - 2.
    """
    u, v = g.endpoints(e)
    return star(g, u) ^ star(g, v)


def second_level(g: Graph, e: int) -> EdgeSet:
    """Ring sum of the base cuts of every edge in base_cut(e)."""
    acc = g.empty_edge_set()
    for f in base_cut(g, e):
        acc ^= base_cut(g, f)
    return acc


def second_level_by_parity(g: Graph, e: int) -> EdgeSet:
    """Same set computed the other way: the cut of the odd-touch vertices.

    S collects the vertices incident to an odd number of base_cut(e)
    edges; the result is every edge with exactly one endpoint in S.
    Must agree with second_level on every edge of every graph.
    """
    touch = [0] * (g.n + 1)
    for f in base_cut(g, e):
        a, b = g.endpoints(f)
        touch[a] += 1
        touch[b] += 1
    odd = {v for v in g.vertices() if touch[v] % 2 == 1}
    bits = 0
    for i, (a, b) in enumerate(g.edges, start=1):
        if (a in odd) != (b in odd):
            bits |= 1 << (i - 1)
    return EdgeSet(g.m, bits)


def edge_weights(g: Graph) -> WeightTable:
    """Weight table with xi(e) = |base_cut(e)| + |second_level(e)|."""
    cuts = [base_cut(g, e) for e in range(1, g.m + 1)]
    xi = []
    for e in range(1, g.m + 1):
        acc = g.empty_edge_set()
        for f in cuts[e - 1]:
            acc ^= cuts[f - 1]
        xi.append(len(cuts[e - 1]) + len(acc))
    zeta = []
    for v in g.vertices():
        zeta.append(sum(xi[f - 1] for f in star(g, v)))
    return WeightTable(
        edge_weights=tuple(xi),
        vertex_weights=tuple(zeta),
        edge_fingerprint=tuple(sorted(xi)),
        vertex_fingerprint=tuple(sorted(zeta)),
    )


def edge_weight_triples(g: Graph, wt: WeightTable) -> list[tuple[int, tuple[int, int, int]]]:
    """One (edge, [xi, zeta_small, zeta_large]) triple per edge.

    The two endpoint weights are sorted so the triple is orientation
    free; equal triples mark edges that may swap under an automorphism.
    """
    out = []
    for e in range(1, g.m + 1):
        u, v = g.endpoints(e)
        zu, zv = wt.vertex_weight(u), wt.vertex_weight(v)
        if zu > zv:
            zu, zv = zv, zu
        out.append((e, (wt.edge_weight(e), zu, zv)))
    return out


def fingerprint_equal(a: WeightTable, b: WeightTable) -> bool:
    """Necessary condition for isomorphism: both sorted fingerprints match."""
    return (a.edge_fingerprint == b.edge_fingerprint
            and a.vertex_fingerprint == b.vertex_fingerprint)
