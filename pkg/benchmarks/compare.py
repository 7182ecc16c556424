#!/usr/bin/env python3
"""Benchmark the compiled kernels against their pure-Python twins.

Run from the repository root after an editable install:

    python benchmarks/compare.py

Each kernel runs on a representative hard input from the built-in
catalog; results are checked for agreement before timings are printed.
"""
from __future__ import annotations

import time

from graphaut import catalog, enumerate_isometric_cycles
from graphaut import _kernels_py
from graphaut.oracle import _adjacency_masks

try:
    from graphaut import _speedups
except ImportError:
    _speedups = None


def timed(fn, *args, repeat: int = 3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return result, best


def degree_keys(g):
    degs = [g.degree(v) for v in g.vertices()]
    labels = {d: i for i, d in enumerate(sorted(set(degs)))}
    return [0] + [labels[d] for d in degs]


def main() -> None:
    if _speedups is None:
        print("compiled extension not available; nothing to compare")
        return

    rows = []

    g = catalog("k9")
    adj, keys = _adjacency_masks(g), degree_keys(g)
    fast, tf = timed(_speedups.automorphism_images, g.n, adj, keys, 10**6)
    slow, ts = timed(_kernels_py.automorphism_images, g.n, adj, keys, 10**6, repeat=1)
    assert fast == slow and len(fast[0]) == 362880
    rows.append(("automorphism backtracking (k9, 362880 maps)", tf, ts))

    g = catalog("k44")
    group_tuples = [p for p in _speedups.automorphism_images(
        g.n, _adjacency_masks(g), degree_keys(g), 10**6)[0]]
    seeds = group_tuples[::97]  # spread sample that generates the whole group
    fast, tf = timed(_speedups.close_permutations, g.n, seeds, 10**6)
    slow, ts = timed(_kernels_py.close_permutations, g.n, seeds, 10**6, repeat=1)
    assert fast == slow
    rows.append((f"closure to {len(fast)} elements (k44 seeds)", tf, ts))

    g = catalog("c10_12")
    adj = _adjacency_masks(g)
    fast, tf = timed(_speedups.hamiltonian_cycle_count, g.n, adj)
    slow, ts = timed(_kernels_py.hamiltonian_cycle_count, g.n, adj, repeat=1)
    assert fast == slow
    rows.append((f"hamiltonian cycles (c10_12, {fast} found)", tf, ts))

    g = catalog("shrikhande")
    iso = enumerate_isometric_cycles(g)
    masks = [c.edges.bits for c in iso.cycles]
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    fast, tf = timed(_speedups.single_cycle_ring_sums, masks, eu, ev, g.n, 4, 10**7,
                     repeat=1)
    slow, ts = timed(_kernels_py.single_cycle_ring_sums, masks, eu, ev, g.n, 4, 10**7,
                     repeat=1)
    assert sorted(fast[0]) == sorted(slow[0])
    rows.append((f"ring-sum cycle search (shrikhande, {fast[1]} subsets)", tf, ts))

    width = max(len(r[0]) for r in rows)
    print(f"{'kernel':{width}}  {'cython':>9}  {'python':>9}  {'speedup':>8}")
    for label, tf, ts in rows:
        print(f"{label:{width}}  {tf:8.3f}s  {ts:8.3f}s  {ts / tf:7.1f}x")


if __name__ == "__main__":
    main()
