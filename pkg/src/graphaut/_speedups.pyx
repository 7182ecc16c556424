# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: same contracts as graphaut._kernels_py.

Limited to graphs whose masks fit machine words (64 vertices / 64
edges); the dispatcher falls back to the pure twins beyond that.
"""
from libc.stdlib cimport free, malloc

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil

IMPLEMENTATION = "cython"

ctypedef unsigned long long u64


def automorphism_images(int n, adj_list, keys_list, long cap):
    cdef u64 adj[65]
    cdef int keys[65]
    cdef int img[65]
    cdef int cur[66]
    cdef u64 want[66]
    cdef u64 used = 0, rest, bit
    cdef int lvl, v, w, u
    cdef bint truncated = False
    found = []

    if n > 64:
        raise ValueError("compiled kernel supports up to 64 vertices")
    for v in range(n + 1):
        adj[v] = <u64> adj_list[v]
        keys[v] = <int> keys_list[v]
    if n == 0:
        return [()], False

    lvl = 1
    cur[1] = 1
    want[1] = 0
    while lvl >= 1:
        v = lvl
        w = cur[lvl]
        while w <= n:
            bit = (<u64> 1) << (w - 1)
            if not (used & bit) and keys[w] == keys[v] and (adj[w] & used) == want[lvl]:
                break
            w += 1
        if w > n:
            lvl -= 1
            if lvl >= 1:
                used ^= (<u64> 1) << (img[lvl] - 1)
                cur[lvl] += 1
            continue
        img[v] = w
        bit = (<u64> 1) << (w - 1)
        used |= bit
        cur[lvl] = w
        if lvl == n:
            if len(found) >= cap:
                truncated = True
                break
            found.append(tuple([img[u] for u in range(1, n + 1)]))
            used ^= bit
            cur[lvl] += 1
            continue
        lvl += 1
        rest = adj[lvl] & ((((<u64> 1) << (lvl - 1))) - 1)
        want[lvl] = 0
        while rest:
            u = __builtin_ctzll(rest) + 1
            rest &= rest - 1
            want[lvl] |= (<u64> 1) << (img[u] - 1)
        cur[lvl] = 1
    return found, truncated


def close_permutations(int n, seeds, long cap):
    cdef int i
    cdef const unsigned char[:] av, bv
    cdef unsigned char buf[256]
    if n > 255:
        raise ValueError("compiled kernel supports degree up to 255")
    ident = bytes(range(1, n + 1))
    gens = []
    for s in seeds:
        b = bytes(s)
        if b != ident and b not in gens:
            gens.append(b)
    known = {ident}
    frontier = [ident]
    while frontier:
        fresh = []
        for a in frontier:
            av = a
            for g in gens:
                bv = g
                for i in range(n):
                    buf[i] = av[bv[i] - 1]
                c = (<char *> buf)[:n]
                if c not in known:
                    known.add(c)
                    if len(known) > cap:
                        return None
                    fresh.append(c)
        frontier = fresh
    return sorted(tuple(b) for b in known)


def hamiltonian_cycle_count(int n, adj_list):
    cdef u64 adj[65]
    cdef int path[65]
    cdef int skip[65]
    cdef u64 visited, rest
    cdef long count = 0
    cdef int depth, last, w
    if n > 64:
        raise ValueError("compiled kernel supports up to 64 vertices")
    if n < 3:
        return 0
    for w in range(n + 1):
        adj[w] = <u64> adj_list[w]
    path[0] = 1
    visited = 1
    depth = 1
    skip[1] = 0
    while depth >= 1:
        last = path[depth - 1]
        if depth == n:
            if (adj[last] & 1) and path[1] < path[n - 1]:
                count += 1
            depth -= 1
            visited ^= (<u64> 1) << (path[depth] - 1)
            continue
        rest = adj[last] & ~visited
        if skip[depth] > 0:
            rest &= ~((((<u64> 1) << skip[depth]) - 1))
        if rest == 0:
            depth -= 1
            if depth >= 1:
                visited ^= (<u64> 1) << (path[depth] - 1)
            continue
        w = __builtin_ctzll(rest) + 1
        skip[depth] = w  # resume past w on backtrack
        path[depth] = w
        visited |= (<u64> 1) << (w - 1)
        depth += 1
        skip[depth] = 0
    return count


def single_cycle_ring_sums(masks_list, eu_list, ev_list, int n,
                           int max_subset, long budget):
    cdef int nmasks = len(masks_list)
    cdef int nedges = len(eu_list)
    cdef u64 *masks = NULL
    cdef int deg[65]
    cdef int touched[65]
    cdef int adj1[65]
    cdef int adj2[65]
    cdef int eu[65]
    cdef int ev[65]
    cdef int stack_i[66]
    cdef u64 stack_acc[66]
    cdef int chosen[66]
    cdef int i, j, k, depth, ntouched, v, a, b, nxt, max_len, bits
    cdef long visited = 0
    cdef u64 acc, rest
    cdef bint ok
    hits = []
    if n > 64 or nedges > 64 or max_subset > 64:
        raise ValueError("compiled kernel supports up to 64 vertices/edges")
    if nmasks == 0 or max_subset <= 0:
        return hits, 0
    masks = <u64 *> malloc(nmasks * sizeof(u64))
    if masks is NULL:
        raise MemoryError()
    try:
        max_len = 0
        for i in range(nmasks):
            masks[i] = <u64> masks_list[i]
            bits = __builtin_popcountll(masks[i])
            if bits > max_len:
                max_len = bits
        for i in range(nedges):
            eu[i] = <int> eu_list[i]
            ev[i] = <int> ev_list[i]
        for v in range(n + 1):
            deg[v] = 0

        depth = 0
        stack_i[0] = 0
        stack_acc[0] = 0
        while depth >= 0:
            i = stack_i[depth]
            if i >= nmasks or depth == max_subset:
                depth -= 1
                if depth >= 0:
                    stack_i[depth] += 1
                continue
            acc = stack_acc[depth] ^ masks[i]
            if __builtin_popcountll(acc) > n + (max_subset - depth - 1) * max_len:
                stack_i[depth] += 1
                continue
            chosen[depth] = i
            visited += 1
            if visited > budget:
                return None, visited
            bits = __builtin_popcountll(acc)
            if 3 <= bits <= n:
                ntouched = 0
                ok = True
                rest = acc
                while rest:
                    j = __builtin_ctzll(rest)
                    rest &= rest - 1
                    a = eu[j]
                    b = ev[j]
                    if deg[a] == 0:
                        touched[ntouched] = a
                        ntouched += 1
                        adj1[a] = b
                    elif deg[a] == 1:
                        adj2[a] = b
                    else:
                        ok = False
                    deg[a] += 1
                    if deg[b] == 0:
                        touched[ntouched] = b
                        ntouched += 1
                        adj1[b] = a
                    elif deg[b] == 1:
                        adj2[b] = a
                    else:
                        ok = False
                    deg[b] += 1
                if ok:
                    for k in range(ntouched):
                        if deg[touched[k]] != 2:
                            ok = False
                            break
                if ok:
                    a = touched[0]
                    b = adj1[a]
                    k = 1
                    while b != touched[0]:
                        if adj1[b] == a:
                            nxt = adj2[b]
                        else:
                            nxt = adj1[b]
                        a = b
                        b = nxt
                        k += 1
                    if k != ntouched:
                        ok = False
                for k in range(ntouched):
                    deg[touched[k]] = 0
                if ok:
                    hits.append((<object> acc,
                                 tuple([chosen[k] for k in range(depth + 1)])))
            depth += 1
            stack_acc[depth] = acc
            stack_i[depth] = i + 1
        return hits, visited
    finally:
        free(masks)
