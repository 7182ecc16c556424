"""Brute-force ground truth: every automorphism, by backtracking.

Vertices are mapped in order 1..n; candidate images must carry the same
(degree, vertex weight) label and agree with the adjacency of everything
mapped so far.  The label pruning is provably sound because both degree
and the cut weights are preserved by any automorphism, and a no-pruning
mode exists so the suite can check exactly that.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .cutspectrum import edge_weights
from .graph import BudgetExceededError, Graph
from .orbits import VertexPartition, group_orbits
from .perms import Permutation, PermutationGroup


@dataclass(frozen=True)
class OracleResult:
    group: PermutationGroup
    order: int
    orbits: VertexPartition
    truncated: bool


def _adjacency_masks(g: Graph) -> list[int]:
    masks = [0] * (g.n + 1)
    for u, v in g.edges:
        masks[u] |= 1 << (v - 1)
        masks[v] |= 1 << (u - 1)
    return masks


def enumerate_automorphisms(g: Graph, cap: int = 10**6, prune: bool = True) -> OracleResult:
    """All automorphisms of g, canonically ordered.

    cap bounds the number of collected permutations; if it is hit the
    result carries truncated=True and must not be trusted as a group.
    prune=False disables the invariant labels for auditing.
    """
    if cap < 1:
        raise ValueError("cap must be at least 1")
    if prune:
        wt = edge_weights(g)
        raw = [(g.degree(v), wt.vertex_weight(v)) for v in g.vertices()]
        labels = {lab: i for i, lab in enumerate(sorted(set(raw)))}
        keys = [0] + [labels[lab] for lab in raw]
    else:
        keys = [0] * (g.n + 1)
    images, truncated = _kernels.automorphism_images(g.n, _adjacency_masks(g), keys, cap)
    group = PermutationGroup((Permutation(t) for t in images), verify=not truncated)
    orbits = group_orbits(group, g=g) if not truncated else group_orbits(group)
    return OracleResult(group=group, order=group.order, orbits=orbits, truncated=truncated)


def true_orbits(g: Graph) -> VertexPartition:
    """Orbit partition of the full automorphism group."""
    result = enumerate_automorphisms(g)
    if result.truncated:
        raise BudgetExceededError("oracle truncated; orbits unavailable")
    return result.orbits


def count_spanning_cycles(g: Graph, max_n: int = 16) -> int:
    """Number of Hamiltonian cycles, distinct as edge sets."""
    if g.n > max_n:
        raise BudgetExceededError(f"{g.n} vertices exceeds the bound {max_n}")
    return _kernels.hamiltonian_cycle_count(g.n, _adjacency_masks(g))
