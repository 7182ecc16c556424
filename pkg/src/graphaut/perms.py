"""Permutations, group closure, Cayley tables and subgroup search.

A permutation stores its image list: images[i] is where vertex i+1
goes.  Composition is (a * b)(v) = a(b(v)), i.e. b acts first; every
table in this package is generated under that convention.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _kernels
from .graph import BudgetExceededError


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        n = len(self.images)
        if sorted(self.images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {self.images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, v: int) -> int:
        return self.images[v - 1]

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: (self.compose(other))(v) = self(other(v))."""
        if self.degree != other.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return Permutation(tuple(self.images[w - 1] for w in other.images))

    def __mul__(self, other: "Permutation") -> "Permutation":
        return self.compose(other)

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for i, w in enumerate(self.images, start=1):
            inv[w - 1] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(w == i for i, w in enumerate(self.images, start=1))

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        """Disjoint cycles, each starting at its smallest element,
        ordered by that element."""
        seen = [False] * (self.degree + 1)
        out = []
        for v in range(1, self.degree + 1):
            if seen[v]:
                continue
            cyc = [v]
            seen[v] = True
            w = self(v)
            while w != v:
                cyc.append(w)
                seen[w] = True
                w = self(w)
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def __repr__(self) -> str:
        return f"Permutation({cycle_notation(self)})"


def cycle_notation(p: Permutation, include_fixed: bool = False) -> str:
    """Canonical cycle form, e.g. '(1 2)(3 4)'; 'id' for the identity
    unless fixed points are requested."""
    cycs = p.cycles(include_fixed=include_fixed)
    if not cycs:
        return "id"
    return "".join("(" + " ".join(str(v) for v in c) + ")" for c in cycs)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse an image list '2,1,4,3' or cycle form '(1 2)(3 4)'.

    In cycle form, unmentioned points are fixed; 'id' is the identity.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    if text == "id":
        return Permutation.identity(n)
    if "(" in text:
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise ValueError(f"stray text outside cycles: {stripped!r}")
        images = list(range(1, n + 1))
        for body in _CYCLE_RE.findall(text):
            elems = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if not elems:
                continue
            if any(not 1 <= v <= n for v in elems):
                raise ValueError(f"cycle element out of range 1..{n}: {elems}")
            if len(set(elems)) != len(elems):
                raise ValueError(f"repeated element in cycle {elems}")
            for a, b in zip(elems, elems[1:] + [elems[0]]):
                if images[a - 1] != a:
                    raise ValueError(f"element {a} appears in two cycles")
                images[a - 1] = b
        return Permutation(tuple(images))
    parts = [int(t) for t in re.split(r"[\s,]+", text) if t]
    if len(parts) != n:
        raise ValueError(f"expected {n} images, got {len(parts)}")
    return Permutation(tuple(parts))


def parity(p: Permutation) -> str:
    """'even' or 'odd', read off the cycle type."""
    transpositions = sum(len(c) - 1 for c in p.cycles())
    return "even" if transpositions % 2 == 0 else "odd"


class PermutationGroup:
    """Canonically ordered list of permutations closed under composition.

    The identity is always first because the identity image list is the
    lexicographic minimum over all bijections.
    """

    def __init__(self, elements: Iterable[Permutation], verify: bool = True):
        elems = sorted(set(elements))
        if not elems:
            raise ValueError("a permutation group needs at least the identity")
        degree = elems[0].degree
        if any(p.degree != degree for p in elems):
            raise ValueError("mixed degrees in group elements")
        self.degree = degree
        self.elements: tuple[Permutation, ...] = tuple(elems)
        self._index = {p.images: i for i, p in enumerate(self.elements)}
        if verify:
            if not elems[0].is_identity():
                raise ValueError("identity missing")
            for p in elems:
                if p.inverse().images not in self._index:
                    raise ValueError(f"inverse of {p} missing")

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, p: Permutation) -> bool:
        return p.images in self._index

    def index_of(self, p: Permutation) -> int:
        return self._index[p.images]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PermutationGroup) and self.elements == other.elements

    def __repr__(self) -> str:
        return f"PermutationGroup(order={self.order}, degree={self.degree})"


def group_closure(seed: Sequence[Permutation], cap: int = 10**6,
                  degree: int | None = None) -> PermutationGroup:
    """Smallest group containing the seed and the identity.

    Breadth-first products until a fixed point; a finite set of
    bijections closed under composition contains all inverses, so
    products alone suffice.  An empty seed gives the trivial group,
    but then the degree must be passed explicitly.
    """
    if seed:
        degree = seed[0].degree
        if any(p.degree != degree for p in seed):
            raise ValueError("mixed degrees in closure seed")
    elif degree is None:
        raise ValueError("closure of an empty seed needs an explicit degree")
    tuples = _kernels.close_permutations(degree, [p.images for p in seed], cap)
    if tuples is None:
        raise BudgetExceededError(f"closure exceeded the cap of {cap} elements")
    return PermutationGroup((Permutation(t) for t in tuples), verify=False)


@dataclass(frozen=True)
class CayleyTable:
    """cells[i][j] = index of elements[i] * elements[j] (j acts first).

    Every row and column is a permutation of the indices, and the
    identity row and column reproduce the index sequence.
    """

    order: int
    cells: tuple[tuple[int, ...], ...]
    block_size: int | None = None


def cayley_table(grp: PermutationGroup, cap: int = 10**4,
                 element_order: Sequence[Permutation] | None = None,
                 block_size: int | None = None) -> CayleyTable:
    """Full multiplication table; raises BudgetExceededError above cap.

    element_order lets callers group the elements (for example by the
    cosets of a subgroup) without changing cell semantics.
    """
    if grp.order > cap:
        raise BudgetExceededError(f"group order {grp.order} exceeds the cap {cap}")
    elems = tuple(element_order) if element_order is not None else grp.elements
    if sorted(elems) != list(grp.elements):
        raise ValueError("element_order must list every group element once")
    pos = {p.images: i for i, p in enumerate(elems)}
    rows = []
    for a in elems:
        rows.append(tuple(pos[a.compose(b).images] for b in elems))
    return CayleyTable(order=len(elems), cells=tuple(rows), block_size=block_size)


def coset_element_order(grp: PermutationGroup, subgroup: Sequence[Permutation]) -> list[Permutation]:
    """Group elements reordered into left cosets of the subgroup.

    The subgroup comes first; each coset keeps the canonical order of
    its members.  Used to render block-structured tables.
    """
    sub = sorted(set(subgroup))
    placed: set[tuple[int, ...]] = set()
    out: list[Permutation] = []
    for rep in grp.elements:
        if rep.images in placed:
            continue
        coset = sorted(rep.compose(h) for h in sub)
        for p in coset:
            if p.images in placed:
                raise ValueError("subgroup does not tile the group into cosets")
            placed.add(p.images)
        out.extend(coset)
    if len(out) != grp.order:
        raise ValueError("cosets do not cover the group")
    return out


def find_klein_four(grp: PermutationGroup) -> PermutationGroup | None:
    """A subgroup {id, a, b, ab} of commuting involutions, if one exists.

    Involutions are tried with the fewest fixed points first (then in
    canonical order), so fixed-point-free Klein groups win when present
    and the result is stable.
    """
    ident = Permutation.identity(grp.degree)
    invs = [p for p in grp.elements if not p.is_identity() and p.compose(p).is_identity()]
    invs.sort(key=lambda p: (sum(1 for v in range(1, p.degree + 1) if p(v) == v), p))
    for i, a in enumerate(invs):
        for b in invs[i + 1:]:
            ab = a.compose(b)
            if ab == b.compose(a) and ab.compose(ab).is_identity() and not ab.is_identity():
                return PermutationGroup([ident, a, b, ab], verify=False)
    return None
