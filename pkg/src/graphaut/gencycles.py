"""Generating cycles and the dihedral route to automorphisms.

A generating cycle is a simple cycle, obtained as a single isometric
cycle or as a ring sum of several, whose vertices all carry the same
weight.  Treating it as the rim of a regular polygon, its 2L rotations
and reflections give partial vertex maps; each map is extended to full
automorphisms by backtracking over the remaining vertices.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _kernels
from .cycles import Cycle, IsometricCycleSet, as_cycle, enumerate_isometric_cycles
from .graph import BudgetExceededError, EdgeSet, Graph
from .orbits import VertexPartition, verify_permutation, weight_classes
from .perms import Permutation


@dataclass(frozen=True)
class GeneratingCycle:
    """A candidate rim cycle plus every producer subset discovered.

    producers lists 1-based index subsets of the isometric-cycle list
    whose ring sum equals this cycle; a singleton subset means the
    cycle is itself isometric.
    """

    cycle: Cycle
    producers: tuple[tuple[int, ...], ...]

    @property
    def scope(self) -> frozenset[int]:
        return frozenset(self.cycle.vertices)


@dataclass(frozen=True)
class CoverConfiguration:
    """A k-subset of isometric cycles covering every vertex whose ring
    sum is one spanning simple cycle."""

    subset: tuple[int, ...]
    covered: frozenset[int]


@dataclass(frozen=True)
class SpectralResult:
    """Outcome of the generating-cycle route to the automorphisms.

    raw_count sums extensions over every (cycle, dihedral map) pair
    before deduplication; by_length maps cycle length to (number of
    cycles, extensions contributed) so per-family products remain
    visible next to the deduplicated truth.
    """

    raw_count: int
    distinct: tuple[Permutation, ...]
    by_length: dict[int, tuple[int, int]]
    candidate_count: int


def _vertex_mask(c: Cycle) -> int:
    mask = 0
    for v in c.vertices:
        mask |= 1 << (v - 1)
    return mask


def enumerate_cycle_covers(g: Graph, iso: IsometricCycleSet, k: int, length: int = 0,
                           full_dihedral: bool = False, budget: int = 10**7,
                           ) -> tuple[list[CoverConfiguration], list[GeneratingCycle]]:
    """Spanning generating cycles built from k-subsets of isometric cycles.

    A configuration is a k-subset of the (length-filtered) isometric
    cycles that covers every vertex and whose ring sum is one simple
    cycle through all n vertices; the generating list deduplicates
    those ring sums.  length=0 disables the filter.  full_dihedral
    keeps only cycles all of whose rotations and reflections are
    automorphisms, the fully symmetric rims.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chosen = [(i, c) for i, c in enumerate(iso.cycles, start=1)
              if length == 0 or c.length == length]
    total = 1
    for step in range(k):
        total = total * max(len(chosen) - step, 0) // (step + 1)
    if total > budget:
        raise BudgetExceededError(f"{total} subsets exceed the budget {budget}")
    full = (1 << g.n) - 1
    vmasks = {i: _vertex_mask(c) for i, c in chosen}
    configurations: list[CoverConfiguration] = []
    producers: dict[EdgeSet, list[tuple[int, ...]]] = {}
    for combo in combinations(chosen, k):
        cover = 0
        for i, _ in combo:
            cover |= vmasks[i]
        if cover != full:
            continue
        acc = g.empty_edge_set()
        for _, c in combo:
            acc ^= c.edges
        cyc = as_cycle(g, acc)
        if cyc is None or len(cyc.vertices) != g.n:
            continue
        subset = tuple(i for i, _ in combo)
        configurations.append(CoverConfiguration(subset=subset,
                                                 covered=frozenset(range(1, g.n + 1))))
        producers.setdefault(acc, []).append(subset)
    generating = []
    for edge_set, subs in producers.items():
        cyc = as_cycle(g, edge_set)
        assert cyc is not None
        if full_dihedral and not _all_dihedral_valid(g, cyc):
            continue
        generating.append(GeneratingCycle(cycle=cyc, producers=tuple(subs)))
    generating.sort(key=lambda q: (q.cycle.length, q.cycle.edges.indices()))
    return configurations, generating


def _all_dihedral_valid(g: Graph, c: Cycle) -> bool:
    """Spanning cycle whose whole dihedral group acts by automorphisms."""
    if len(c.vertices) != g.n:
        return False
    for pm in dihedral_partial_maps(c):
        images = [0] * g.n
        for v, w in pm.items():
            images[v - 1] = w
        if not verify_permutation(g, Permutation(tuple(images))):
            return False
    return True


def candidate_generating_cycles(g: Graph, iso: IsometricCycleSet | None = None,
                                max_subset: int = 6, budget: int = 10**7,
                                part: VertexPartition | None = None) -> list[GeneratingCycle]:
    """Every single-weight-class simple cycle reachable as a ring sum of
    at most max_subset isometric cycles.

    Includes the isometric cycles themselves (subsets of size one) when
    their vertices share a weight class; each result records all
    producer subsets the enumeration met.  Canonically ordered.
    """
    if max_subset < 1:
        raise ValueError("max_subset must be at least 1")
    if iso is None:
        iso = enumerate_isometric_cycles(g)
    if part is None:
        part = weight_classes(g)
    class_masks = []
    for cls in part.classes:
        mask = 0
        for v in cls.vertices:
            mask |= 1 << (v - 1)
        class_masks.append(mask)
    masks = [c.edges.bits for c in iso.cycles]
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    hits, _visited = _kernels.single_cycle_ring_sums(masks, eu, ev, g.n, max_subset, budget)
    if hits is None:
        raise BudgetExceededError(f"ring-sum enumeration exceeded the budget {budget}")
    producers: dict[int, list[tuple[int, ...]]] = {}
    for bits, subset in hits:
        producers.setdefault(bits, []).append(tuple(i + 1 for i in subset))
    out = []
    for bits, subs in producers.items():
        vmask = 0
        for e in EdgeSet(g.m, bits):
            u, v = g.endpoints(e)
            vmask |= (1 << (u - 1)) | (1 << (v - 1))
        if not any(vmask & cm == vmask for cm in class_masks):
            continue
        cyc = as_cycle(g, EdgeSet(g.m, bits))
        assert cyc is not None
        out.append(GeneratingCycle(cycle=cyc, producers=tuple(sorted(subs))))
    out.sort(key=lambda q: (q.cycle.length, q.cycle.edges.indices()))
    return out


def dihedral_partial_maps(q: GeneratingCycle | Cycle) -> list[dict[int, int]]:
    """The 2L rotation and reflection maps on the cycle's vertices.

    Returned as partial vertex maps (dicts); the identity map comes
    first, then the remaining rotations, then the reflections.
    """
    cyc = q.cycle if isinstance(q, GeneratingCycle) else q
    seq = cyc.vertices
    L = len(seq)
    maps = []
    for r in range(L):
        maps.append({seq[i]: seq[(i + r) % L] for i in range(L)})
    for r in range(L):
        maps.append({seq[i]: seq[(r - i) % L] for i in range(L)})
    return maps


def extend_partial_map(g: Graph, part: VertexPartition, pm: dict[int, int]) -> list[Permutation]:
    """All automorphisms extending the partial vertex map.

    Backtracks over the unmapped vertices; a candidate image must sit
    in the same weight class, have the same degree, and agree with the
    adjacency of everything mapped before it.  Every returned
    permutation additionally passes verify_permutation.
    """
    if len(set(pm.values())) != len(pm):
        raise ValueError("partial map is not injective")
    class_of = {}
    for cls in part.classes:
        for v in cls.vertices:
            class_of[v] = cls
    images = [0] * (g.n + 1)
    mapped: list[int] = []
    used = set()

    def consistent(v: int, w: int) -> bool:
        if class_of[v] is not class_of[w] or g.degree(v) != g.degree(w):
            return False
        for u in mapped:
            if (u in g.adjacency[v]) != (images[u] in g.adjacency[w]):
                return False
        return True

    for v in sorted(pm):
        w = pm[v]
        if not consistent(v, w):
            return []
        images[v] = w
        mapped.append(v)
        used.add(w)

    free = [v for v in g.vertices() if not images[v]]
    found: list[Permutation] = []

    def walk(idx: int) -> None:
        if idx == len(free):
            p = Permutation(tuple(images[1:]))
            if verify_permutation(g, p):
                found.append(p)
            return
        v = free[idx]
        for w in class_of[v].vertices:
            if w in used or not consistent(v, w):
                continue
            images[v] = w
            mapped.append(v)
            used.add(w)
            walk(idx + 1)
            images[v] = 0
            mapped.pop()
            used.discard(w)

    walk(0)
    return sorted(found)


def automorphisms_from_generating_cycles(g: Graph, max_subset: int = 6,
                                         budget: int = 10**7,
                                         iso: IsometricCycleSet | None = None) -> SpectralResult:
    """Run the whole spectral route: candidates, dihedral maps, extensions.

    raw_count intentionally counts every extension of every (cycle,
    map) pair so it can be compared with per-family products; distinct
    deduplicates into the actual automorphism list.
    """
    part = weight_classes(g)
    candidates = candidate_generating_cycles(g, iso=iso, max_subset=max_subset,
                                             budget=budget, part=part)
    raw = 0
    by_length: dict[int, list[int]] = {}
    distinct: set[Permutation] = set()
    for q in candidates:
        L = q.cycle.length
        slot = by_length.setdefault(L, [0, 0])
        slot[0] += 1
        for pm in dihedral_partial_maps(q):
            exts = extend_partial_map(g, part, pm)
            raw += len(exts)
            slot[1] += len(exts)
            distinct.update(exts)
    return SpectralResult(
        raw_count=raw,
        distinct=tuple(sorted(distinct)),
        by_length={L: (c, e) for L, (c, e) in sorted(by_length.items())},
        candidate_count=len(candidates),
    )
