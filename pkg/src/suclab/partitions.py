"""Vertex partitions, quotient graphs and invariance tests.

A partition is an ordered list of disjoint nonempty cells covering the vertex
set; the order matters only because it fixes the columns of the
characteristic matrix.  A meta-partition groups the *cells* of a base
partition and is what gets merged back down onto the vertices.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Literal, Sequence

from .graphs import SimpleGraph, WeightedDigraph, degree_in
from .linalg import IntMatrix, hstack, rank, vstack

MAX_ENUMERATION = 12  # Bell(13) > 27 million; nothing here ever needs that


class NotAlmostEquitableError(ValueError):
    """Raised when a quotient is requested for a partition that is not an AEP."""


class Partition:
    """Ordered partition of the vertex set 0..n-1 into disjoint cells."""

    __slots__ = ("cells", "n")

    def __init__(self, cells: Iterable[Iterable[int]]):
        cs = tuple(tuple(sorted(set(c))) for c in cells)
        if any(not c for c in cs):
            raise ValueError("empty cell")
        flat = [v for c in cs for v in c]
        n = len(flat)
        if sorted(flat) != list(range(n)):
            raise ValueError("cells must disjointly cover 0..n-1")
        object.__setattr__(self, "cells", cs)
        object.__setattr__(self, "n", n)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def k(self) -> int:
        return len(self.cells)

    def sorted_by_min(self) -> "Partition":
        return Partition(sorted(self.cells, key=lambda c: c[0]))

    @classmethod
    def singletons(cls, n: int) -> "Partition":
        return cls([(v,) for v in range(n)])

    @classmethod
    def one_cell(cls, n: int) -> "Partition":
        return cls([range(n)])

    def cell_of(self, v: int) -> int:
        for i, c in enumerate(self.cells):
            if v in c:
                return i
        raise ValueError(f"vertex {v} not covered")

    def serialize(self) -> list[list[int]]:
        return [list(c) for c in self.cells]

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)

    def __repr__(self) -> str:
        return f"Partition({[list(c) for c in self.cells]})"


class MetaPartition:
    """Ordered partition of the cell indices 0..k-1 of a base partition."""

    __slots__ = ("groups", "k")

    def __init__(self, groups: Iterable[Iterable[int]]):
        gs = tuple(tuple(sorted(set(g))) for g in groups)
        if any(not g for g in gs):
            raise ValueError("empty group")
        flat = [i for g in gs for i in g]
        k = len(flat)
        if sorted(flat) != list(range(k)):
            raise ValueError("groups must disjointly cover the cell indices 0..k-1")
        object.__setattr__(self, "groups", gs)
        object.__setattr__(self, "k", k)

    def __setattr__(self, name, value):
        raise AttributeError("MetaPartition is immutable")

    @property
    def m(self) -> int:
        return len(self.groups)

    def as_partition(self) -> Partition:
        """The same grouping viewed as a Partition of 0..k-1."""
        return Partition(self.groups)

    def serialize(self) -> list[list[int]]:
        return [list(g) for g in self.groups]

    def __eq__(self, other) -> bool:
        return isinstance(other, MetaPartition) and self.groups == other.groups

    def __hash__(self) -> int:
        return hash(self.groups)

    def __repr__(self) -> str:
        return f"MetaPartition({[list(g) for g in self.groups]})"


def characteristic_matrix(p: Partition) -> IntMatrix:
    """n-by-k 0/1 matrix whose i-th column indicates the i-th cell."""
    cols = []
    for c in p.cells:
        col = [0] * p.n
        for v in c:
            col[v] = 1
        cols.append(col)
    return IntMatrix(zip(*cols))


def is_aep(g: SimpleGraph | WeightedDigraph, p: Partition) -> bool:
    """Almost equitable: out-degree into every *other* cell is constant per cell."""
    if p.n != g.n:
        raise ValueError("partition does not cover the vertex set")
    if isinstance(g, SimpleGraph):
        cmasks = [sum(1 << v for v in c) for c in p.cells]
        for i, ci in enumerate(p.cells):
            if len(ci) == 1:
                continue
            for j, mj in enumerate(cmasks):
                if i == j:
                    continue
                d0 = (g.masks[ci[0]] & mj).bit_count()
                if any((g.masks[u] & mj).bit_count() != d0 for u in ci[1:]):
                    return False
        return True
    for i, ci in enumerate(p.cells):
        if len(ci) == 1:
            continue
        for j, cj in enumerate(p.cells):
            if i == j:
                continue
            d0 = degree_in(g, ci[0], cj)
            if any(degree_in(g, u, cj) != d0 for u in ci[1:]):
                return False
    return True


def is_equitable(g: SimpleGraph | WeightedDigraph, p: Partition) -> bool:
    """AEP plus constant degree *within* each cell."""
    if not is_aep(g, p):
        return False
    for c in p.cells:
        d0 = degree_in(g, c[0], c)
        if any(degree_in(g, u, c) != d0 for u in c[1:]):
            return False
    return True


def quotient(g: SimpleGraph | WeightedDigraph, p: Partition) -> WeightedDigraph:
    """Quotient digraph on the cells, arc weight deg(C_i, C_j).

    Raises NotAlmostEquitableError when the cell degrees are not constant.
    """
    if not is_aep(g, p):
        raise NotAlmostEquitableError(f"{p!r} is not an almost equitable partition")
    k = p.k
    w = [[0] * k for _ in range(k)]
    for i, ci in enumerate(p.cells):
        for j, cj in enumerate(p.cells):
            if i != j:
                w[i][j] = degree_in(g, ci[0], cj)
    return WeightedDigraph(w)


def rho_merge(p: Partition, rho: MetaPartition) -> Partition:
    """Flatten each group of ``rho``: cell j of the result unions the cells in group j."""
    if rho.k != p.k:
        raise ValueError(f"meta-partition covers {rho.k} cells, base has {p.k}")
    return Partition(
        [sorted(v for i in group for v in p.cells[i]) for group in rho.groups]
    )


def is_pi_regular(p: Partition, rho: MetaPartition) -> bool:
    """Each group of ``rho`` references cells of ``p`` of equal cardinality."""
    if rho.k != p.k:
        raise ValueError(f"meta-partition covers {rho.k} cells, base has {p.k}")
    for group in rho.groups:
        sizes = {len(p.cells[i]) for i in group}
        if len(sizes) > 1:
            return False
    return True


def preserves_image(m: IntMatrix, p: IntMatrix) -> bool:
    """True iff the column space of ``p`` is invariant under ``m``."""
    if m.cols != p.rows:
        raise ValueError(f"dimension mismatch: {m.shape} vs {p.shape}")
    return rank(hstack(p, m @ p)) == rank(p)


def preserves_kernel(m: IntMatrix, p: IntMatrix) -> bool:
    """True iff ker(P^T) is invariant under ``m``.

    Equivalent to the rows of P^T M lying in the row space of P^T.
    """
    if m.rows != p.rows:
        raise ValueError(f"dimension mismatch: {m.shape} vs {p.shape}")
    pt = p.transpose()
    return rank(vstack(pt, pt @ m)) == rank(pt)


Constraint = Literal["last_singleton", "last_pair_group"] | None


def set_partitions(items: Sequence[int]) -> Iterator[list[list[int]]]:
    """All set partitions of ``items`` via restricted-growth strings, lex order."""
    items = list(items)
    n = len(items)
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def emit() -> list[list[int]]:
        m = max(rgs) + 1
        groups: list[list[int]] = [[] for _ in range(m)]
        for idx, b in enumerate(rgs):
            groups[b].append(items[idx])
        return groups

    while True:
        yield emit()
        # next restricted-growth string in lexicographic order
        i = n - 1
        while i > 0 and rgs[i] > max(rgs[:i]):
            i -= 1
        if i == 0:
            return
        rgs[i] += 1
        for j in range(i + 1, n):
            rgs[j] = 0


def enumerate_meta_partitions(k: int, constraint: Constraint = None) -> Iterator[MetaPartition]:
    """Every meta-partition of k cells honoring the constraint, each once.

    ``last_singleton`` pins cell k-1 as its own group; ``last_pair_group``
    pins cells k-2 and k-1 together as one group.  The free cells are swept
    with restricted-growth strings in lexicographic order, so the stream is
    deterministic.
    """
    if k > MAX_ENUMERATION:
        raise ValueError(f"k={k} exceeds the enumeration guard {MAX_ENUMERATION}")
    if k < 1:
        raise ValueError("need at least one cell")
    if constraint is None:
        free, tail = list(range(k)), []
    elif constraint == "last_singleton":
        free, tail = list(range(k - 1)), [[k - 1]]
    elif constraint == "last_pair_group":
        if k < 2:
            raise ValueError("last_pair_group needs k >= 2")
        free, tail = list(range(k - 2)), [[k - 2, k - 1]]
    else:
        raise ValueError(f"unknown constraint {constraint!r}")
    for groups in set_partitions(free):
        yield MetaPartition(groups + tail)


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """Every partition of the vertex set 0..n-1 (Bell(n) of them)."""
    if n > MAX_ENUMERATION:
        raise ValueError(f"n={n} exceeds the enumeration guard {MAX_ENUMERATION}")
    for groups in set_partitions(range(n)):
        yield Partition(groups)
