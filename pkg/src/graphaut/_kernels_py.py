"""Pure-Python kernels for the search-heavy inner loops.

Same contracts as the compiled twins in _speedups.pyx; every function
works on plain ints, so arbitrarily large graphs are handled here even
when the compiled module must decline them.

Conventions: vertices are 1..n; adjacency masks use bit v-1 for vertex
v; permutations travel as image tuples.
"""
from __future__ import annotations

IMPLEMENTATION = "python"


def automorphism_images(n: int, adj: list[int], keys: list[int], cap: int):
    """All vertex bijections preserving adjacency, by backtracking.

    adj[v] holds the neighbour mask of v (index 0 unused); keys[v] is an
    arbitrary invariant label: vertex v may only map to vertices with
    the same label.  Returns (list of image tuples, truncated flag);
    search order is canonical so the output is deterministic.
    """
    found: list[tuple[int, ...]] = []
    img = [0] * (n + 1)
    used = 0
    truncated = False

    def walk(v: int) -> bool:
        nonlocal used, truncated
        if v > n:
            if len(found) >= cap:
                truncated = True
                return False
            found.append(tuple(img[1:]))
            return True
        below = (1 << (v - 1)) - 1
        want = 0
        rest = adj[v] & below
        while rest:
            low = rest & -rest
            rest ^= low
            want |= 1 << (img[low.bit_length()] - 1)
        for w in range(1, n + 1):
            bit = 1 << (w - 1)
            if used & bit or keys[w] != keys[v]:
                continue
            if adj[w] & used != want:
                continue
            img[v] = w
            used |= bit
            ok = walk(v + 1)
            used ^= bit
            if not ok:
                return False
        return True

    walk(1)
    return found, truncated


def close_permutations(n: int, seeds: list[tuple[int, ...]], cap: int):
    """Closure of the seed set under composition, identity included.

    Returns the sorted list of image tuples, or None when the closure
    grows past cap.  Finite sets of bijections closed under products
    are groups, so no explicit inverses are needed.
    """
    ident = tuple(range(1, n + 1))
    gens = [tuple(s) for s in dict.fromkeys(seeds) if tuple(s) != ident]
    known = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            for b in gens:
                c = tuple(a[w - 1] for w in b)
                if c not in known:
                    known.add(c)
                    if len(known) > cap:
                        return None
                    fresh.append(c)
        frontier = fresh
    return sorted(known)


def hamiltonian_cycle_count(n: int, adj: list[int]) -> int:
    """Number of spanning cycles, distinct as edge sets.

    Anchored at vertex 1 with the second vertex forced below the last,
    so each cycle is counted exactly once.
    """
    if n < 3:
        return 0
    count = 0
    path = [1]
    visited = 1  # bit 0 = vertex 1

    def extend(last: int) -> None:
        nonlocal count, visited
        if len(path) == n:
            if adj[last] & 1 and path[1] < path[-1]:
                count += 1
            return
        rest = adj[last] & ~visited
        while rest:
            low = rest & -rest
            rest ^= low
            w = low.bit_length()
            path.append(w)
            visited |= low
            extend(w)
            path.pop()
            visited ^= low
    extend(1)
    return count


def single_cycle_ring_sums(masks: list[int], eu: list[int], ev: list[int],
                           n: int, max_subset: int, budget: int):
    """Ring sums of up to max_subset masks that form one simple cycle.

    masks are edge bit sets; eu/ev give each edge's endpoints (1-based,
    indexed by bit position).  Returns (hits, subsets_visited) where
    hits is a list of (xor_mask, index_subset) pairs covering every
    producing subset, or (None, visited) when the budget is exhausted.
    """
    nmasks = len(masks)
    max_len = max((m.bit_count() for m in masks), default=0)
    hits: list[tuple[int, tuple[int, ...]]] = []
    visited = 0
    deg = [0] * (n + 1)

    def is_single_cycle(x: int) -> bool:
        touched = []
        rest = x
        while rest:
            low = rest & -rest
            rest ^= low
            i = low.bit_length() - 1
            for v in (eu[i], ev[i]):
                if deg[v] == 0:
                    touched.append(v)
                deg[v] += 1
        ok = all(deg[v] == 2 for v in touched)
        if ok:
            adj: dict[int, list[int]] = {v: [] for v in touched}
            rest = x
            while rest:
                low = rest & -rest
                rest ^= low
                i = low.bit_length() - 1
                adj[eu[i]].append(ev[i])
                adj[ev[i]].append(eu[i])
            seen = {touched[0]}
            stack = [touched[0]]
            while stack:
                for w in adj[stack.pop()]:
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            ok = len(seen) == len(touched)
        for v in touched:
            deg[v] = 0
        return ok

    exhausted = False

    def walk(start: int, depth: int, acc: int, chosen: list[int]) -> None:
        nonlocal visited, exhausted
        if exhausted:
            return
        if depth > 0:
            visited += 1
            if visited > budget:
                exhausted = True
                return
            bits = acc.bit_count()
            if 3 <= bits <= n and is_single_cycle(acc):
                hits.append((acc, tuple(chosen)))
        if depth == max_subset:
            return
        slack = n + (max_subset - depth - 1) * max_len
        for i in range(start, nmasks):
            nxt = acc ^ masks[i]
            if nxt.bit_count() > slack:
                continue
            chosen.append(i)
            walk(i + 1, depth + 1, nxt, chosen)
            chosen.pop()
            if exhausted:
                return

    walk(0, 0, 0, [])
    if exhausted:
        return None, visited
    return hits, visited
