"""Kernel dispatch: compiled extension when available, pure Python otherwise.

Set GRAPHAUT_PURE=1 to force the pure twins (used by the benchmark and
by the cross-implementation tests).  Graphs too large for the machine-
word masks of the extension fall back per call.
"""
from __future__ import annotations

import os

from . import _kernels_py

_fast = None
if not os.environ.get("GRAPHAUT_PURE"):
    try:
        from . import _speedups as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

IMPLEMENTATION = _fast.IMPLEMENTATION if _fast is not None else _kernels_py.IMPLEMENTATION


def automorphism_images(n, adj, keys, cap):
    if _fast is not None and n <= 64:
        return _fast.automorphism_images(n, adj, keys, cap)
    return _kernels_py.automorphism_images(n, adj, keys, cap)


def close_permutations(n, seeds, cap):
    if _fast is not None and n <= 255:
        return _fast.close_permutations(n, seeds, cap)
    return _kernels_py.close_permutations(n, seeds, cap)


def hamiltonian_cycle_count(n, adj):
    if _fast is not None and n <= 64:
        return _fast.hamiltonian_cycle_count(n, adj)
    return _kernels_py.hamiltonian_cycle_count(n, adj)


def single_cycle_ring_sums(masks, eu, ev, n, max_subset, budget):
    if _fast is not None and n <= 64 and len(eu) <= 64 and max_subset <= 64:
        return _fast.single_cycle_ring_sums(masks, eu, ev, n, max_subset, budget)
    return _kernels_py.single_cycle_ring_sums(masks, eu, ev, n, max_subset, budget)
