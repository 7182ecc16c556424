"""Graph and edge-set values shared by every other module.

Vertices are numbered 1..n and edges carry stable 1-based indices given
by their position in the edge list; two graphs with the same edges in a
different order are different values on purpose, because every derived
weight vector is positional.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph input: bad text, loops, duplicates, range errors."""


class BudgetExceededError(RuntimeError):
    """A combinatorial search exceeded its configured budget."""


class EdgeSet:
    """Subset of the edge indices 1..m, stored as a bit mask.

    Bit i-1 of ``bits`` is edge i.  Symmetric difference is ``^``; it is
    the only algebraic operation the cut and cycle machinery needs.
    """

    __slots__ = ("m", "bits")

    def __init__(self, m: int, bits: int = 0):
        if bits < 0 or bits >> m:
            raise ValueError(f"bits out of range for {m} edges")
        self.m = m
        self.bits = bits

    @classmethod
    def from_indices(cls, m: int, indices: Iterable[int]) -> "EdgeSet":
        bits = 0
        for i in indices:
            if not 1 <= i <= m:
                raise ValueError(f"edge index {i} out of range 1..{m}")
            bits |= 1 << (i - 1)
        return cls(m, bits)

    def indices(self) -> tuple[int, ...]:
        out = []
        rest = self.bits
        while rest:
            low = rest & -rest
            out.append(low.bit_length())
            rest ^= low
        return tuple(out)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __contains__(self, index: int) -> bool:
        return 1 <= index <= self.m and self.bits >> (index - 1) & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices())

    def __xor__(self, other: "EdgeSet") -> "EdgeSet":
        if self.m != other.m:
            raise ValueError(f"edge spaces differ: {self.m} vs {other.m}")
        return EdgeSet(self.m, self.bits ^ other.bits)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, EdgeSet) and (self.m, self.bits) == (other.m, other.bits)

    def __hash__(self) -> int:
        return hash((self.m, self.bits))

    def __repr__(self) -> str:
        return f"EdgeSet({{{', '.join('e%d' % i for i in self.indices())}}})"


@dataclass(frozen=True)
class SrgParams:
    """Parameters (v, k, lam, mu) of a strongly regular graph.

    ``mu`` is None for complete graphs, where no non-adjacent pair
    exists and the common-neighbour count is vacuous.
    """

    v: int
    k: int
    lam: int
    mu: int | None

    def identity_holds(self) -> bool:
        if self.mu is None:
            return True
        return self.mu * (self.v - self.k - 1) == self.k * (self.k - self.lam - 1)


class Graph:
    """Undirected simple graph with 1-based vertices and indexed edges."""

    def __init__(self, name: str, n: int, edges: Iterable[tuple[int, int]]):
        self.name = name
        if n < 1:
            raise GraphError(f"vertex count must be positive, got {n}")
        self.n = n
        edges = tuple((int(u), int(v)) for u, v in edges)
        seen: set[frozenset[int]] = set()
        for pos, (u, v) in enumerate(edges, start=1):
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge {pos}: vertex out of range 1..{n}: ({u}, {v})")
            if u == v:
                raise GraphError(f"edge {pos}: loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise GraphError(f"edge {pos}: duplicate edge ({u}, {v})")
            seen.add(key)
        self.edges = edges
        self.m = len(edges)
        adj: list[set[int]] = [set() for _ in range(n + 1)]
        star = [0] * (n + 1)
        index: dict[frozenset[int], int] = {}
        for i, (u, v) in enumerate(edges, start=1):
            adj[u].add(v)
            adj[v].add(u)
            star[u] |= 1 << (i - 1)
            star[v] |= 1 << (i - 1)
            index[frozenset((u, v))] = i
        self.adjacency = tuple(frozenset(a) for a in adj)
        self._star = tuple(star)
        self._edge_index = index
        self._dist: tuple[tuple[int, ...], ...] | None = None

    # -- identity ---------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and (self.n, self.edges) == (other.n, other.edges)

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph({self.name!r}, n={self.n}, m={self.m})"

    # -- basic queries ----------------------------------------------------

    def vertices(self) -> range:
        return range(1, self.n + 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return len(self.adjacency[v])

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e - 1]

    def edge_number(self, u: int, v: int) -> int | None:
        return self._edge_index.get(frozenset((u, v)))

    def empty_edge_set(self) -> EdgeSet:
        return EdgeSet(self.m)

    def edge_set(self, indices: Iterable[int]) -> EdgeSet:
        return EdgeSet.from_indices(self.m, indices)

    def full_edge_set(self) -> EdgeSet:
        return EdgeSet(self.m, (1 << self.m) - 1)

    def _check_vertex(self, v: int) -> None:
        if not 1 <= v <= self.n:
            raise GraphError(f"vertex {v} out of range 1..{self.n}")

    def _check_edge(self, e: int) -> None:
        if not 1 <= e <= self.m:
            raise GraphError(f"edge index {e} out of range 1..{self.m}")

    # -- metric -----------------------------------------------------------

    def distances(self) -> tuple[tuple[int, ...], ...]:
        """All-pairs BFS distances; row/column 0 unused, -1 = unreachable."""
        if self._dist is None:
            rows = [tuple([-1] * (self.n + 1))]
            for s in self.vertices():
                d = [-1] * (self.n + 1)
                d[s] = 0
                q = deque([s])
                while q:
                    u = q.popleft()
                    for w in self.adjacency[u]:
                        if d[w] < 0:
                            d[w] = d[u] + 1
                            q.append(w)
                rows.append(tuple(d))
            self._dist = tuple(rows)
        return self._dist


def star(g: Graph, v: int) -> EdgeSet:
    """All edges incident to v; its size is deg(v)."""
    g._check_vertex(v)
    return EdgeSet(g.m, g._star[v])


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    seen = {1}
    stack = [1]
    while stack:
        for w in g.adjacency[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_nonseparable(g: Graph) -> bool:
    """Connected, at least 3 vertices, and no articulation vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    for cut in g.vertices():
        rest = [v for v in g.vertices() if v != cut]
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            for w in g.adjacency[stack.pop()]:
                if w != cut and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != g.n - 1:
            return False
    return True


def srg_parameters(g: Graph) -> SrgParams | None:
    """(v, k, lam, mu) if the graph is strongly regular, else None.

    Counts common neighbours directly over every vertex pair; raises
    GraphError for non-regular input.
    """
    degs = {g.degree(v) for v in g.vertices()}
    if len(degs) != 1:
        raise GraphError("srg parameters are defined for regular graphs only")
    k = degs.pop()
    lam: int | None = None
    mu: int | None = None
    for u in g.vertices():
        for v in range(u + 1, g.n + 1):
            common = len(g.adjacency[u] & g.adjacency[v])
            if v in g.adjacency[u]:
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    if lam is None:
        return None  # no edges at all
    return SrgParams(v=g.n, k=k, lam=lam, mu=mu)


# -- text formats ----------------------------------------------------------


def parse_graph(text: str, name: str = "graph") -> Graph:
    """Parse the edge-list format: optional '#' comments, 'n m' header,
    then exactly m lines 'u v'.  Errors carry 1-based line numbers.
    """
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"line {lineno}: expected two integers, got {line!r}") from None
        if header is None:
            header = (a, b)
        else:
            edges.append((a, b))
            lines.append(lineno)
    if header is None:
        raise GraphError("empty input: missing 'n m' header line")
    n, m = header
    if n < 1 or m < 0:
        raise GraphError(f"malformed header: n={n}, m={m}")
    if len(edges) != m:
        raise GraphError(f"header promises {m} edges, found {len(edges)}")
    seen: dict[frozenset[int], int] = {}
    for (u, v), lineno in zip(edges, lines):
        if u == v:
            raise GraphError(f"line {lineno}: loop at vertex {u}")
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphError(f"line {lineno}: vertex out of range 1..{n}: ({u}, {v})")
        key = frozenset((u, v))
        if key in seen:
            raise GraphError(f"line {lineno}: duplicate edge ({u}, {v}), "
                             f"first seen on line {seen[key]}")
        seen[key] = lineno
    return Graph(name, n, edges)


def parse_graph_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphError(f"invalid json: {exc}") from None
    try:
        return Graph(str(obj.get("name", "graph")), int(obj["n"]),
                     [(int(u), int(v)) for u, v in obj["edges"]])
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"invalid graph object: {exc}") from None


def export_graph(g: Graph, fmt: str = "edge-list") -> str:
    """Emit edge-list, json or dot text.

    Edge-list and json round-trip exactly through the parsers (same n,
    same edge order); dot carries one statement per edge in index order.
    """
    if fmt == "edge-list":
        lines = [f"# {g.name}", f"{g.n} {g.m}"]
        lines += [f"{u} {v}" for u, v in g.edges]
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return json.dumps({"name": g.name, "n": g.n, "edges": [list(e) for e in g.edges]})
    if fmt == "dot":
        body = "".join(f"  {u} -- {v};\n" for u, v in g.edges)
        ident = "".join(c if c.isalnum() or c == "_" else "_" for c in g.name) or "G"
        return f"graph {ident} {{\n{body}}}\n"
    raise ValueError(f"unknown format {fmt!r}")
