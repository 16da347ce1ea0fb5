"""Twin vertices, their integer eigenvectors, and twin graphs.

Two vertices are twins when their neighborhoods agree outside the pair
itself.  Every twin pair {u, v} contributes the eigenvector e_u - e_v of the
Laplacian with integer eigenvalue deg(u) + [u adjacent to v], which is what
makes twins an obstruction to controllability from any input that weights u
and v equally.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import SimpleGraph, laplacian, laplacian_rows
from .linalg import char_poly, is_squarefree
from .partitions import Partition

# "number of twins" always means the number of unordered twin *pairs*;
# overlapping pairs (twin triples) are each reported.


class NotTwinGraphError(ValueError):
    """Raised when an operation requires a twin graph and the input is not one."""


@dataclass(frozen=True)
class TwinPair:
    u: int
    v: int
    adjacent: bool
    faria_eigenvalue: int

    def __iter__(self):
        return iter((self.u, self.v))


@dataclass(frozen=True)
class TwinPartition:
    """Twin pairs as 2-cells plus the remaining vertices as singletons."""

    twin_cells: tuple[tuple[int, int], ...]
    singletons: tuple[int, ...]

    @property
    def t(self) -> int:
        return len(self.twin_cells)

    def as_partition(self) -> Partition:
        return Partition(list(self.twin_cells) + [(v,) for v in self.singletons])

    def serialize(self) -> list[list[int]]:
        return [list(c) for c in self.twin_cells] + [[v] for v in self.singletons]


def twin_pairs(g: SimpleGraph) -> list[TwinPair]:
    """All unordered twin pairs, sorted; overlapping pairs are all reported."""
    out = []
    for u in range(g.n):
        mu = g.masks[u]
        for v in range(u + 1, g.n):
            drop = ~((1 << u) | (1 << v))
            if (mu & drop) == (g.masks[v] & drop):
                adj = bool(mu >> v & 1)
                out.append(TwinPair(u, v, adj, mu.bit_count() + adj))
    return out


def is_twin_pair(g: SimpleGraph, u: int, v: int) -> bool:
    drop = ~((1 << u) | (1 << v))
    return u != v and (g.masks[u] & drop) == (g.masks[v] & drop)


def faria_vector(g: SimpleGraph, pair: TwinPair) -> tuple[tuple[int, ...], int]:
    """The eigenvector e_u - e_v and its integer eigenvalue, verified exactly."""
    u, v = pair.u, pair.v
    if not is_twin_pair(g, u, v):
        raise ValueError(f"{{{u},{v}}} is not a twin pair")
    x = [0] * g.n
    x[u], x[v] = 1, -1
    lam = g.degree(u) + (1 if g.has_edge(u, v) else 0)
    lx = [sum(r * xi for r, xi in zip(row, x)) for row in laplacian_rows(g)]
    assert lx == [lam * xi for xi in x], "twin eigenvector identity failed"
    return tuple(x), lam


def max_twin_bound(n: int) -> int:
    """Largest twin-pair count a simple-spectrum graph on n vertices can have."""
    if n < 1:
        raise ValueError("n must be positive")
    return (n - 1) // 2


def check_twin_graph(g: SimpleGraph) -> tuple[bool, str]:
    """Twin-graph test with a reason string for the negative case."""
    if not is_squarefree(char_poly(laplacian(g))):
        return False, "Laplacian spectrum is not simple"
    pairs = twin_pairs(g)
    bound = max_twin_bound(g.n)
    if len(pairs) != bound:
        return False, f"{len(pairs)} twin pairs, need exactly {bound}"
    return True, ""


def is_twin_graph(g: SimpleGraph) -> bool:
    """Simple Laplacian spectrum and the maximal number floor((n-1)/2) of twin pairs."""
    ok, _ = check_twin_graph(g)
    return ok


def twin_partition(g: SimpleGraph) -> TwinPartition:
    """Twin cells in lexicographic order, then the non-twin vertices ascending."""
    ok, reason = check_twin_graph(g)
    if not ok:
        raise NotTwinGraphError(reason)
    pairs = twin_pairs(g)
    covered = set()
    for p in pairs:
        if p.u in covered or p.v in covered:
            # a shared vertex forces an order-3 symmetry and hence a repeated
            # eigenvalue, impossible past the simple-spectrum gate
            raise AssertionError("overlapping twin pairs despite simple spectrum")
        covered.update((p.u, p.v))
    cells = tuple(sorted((p.u, p.v) for p in pairs))
    singles = tuple(v for v in range(g.n) if v not in covered)
    return TwinPartition(cells, singles)


def min_input_lower_bound(g: SimpleGraph) -> int:
    """Minimum number of input vertices any controllable input set must have.

    Equals the twin-pair count t: an input set that misses an entire twin
    cell is orthogonal to that cell's eigenvector, so at least one vertex per
    cell is required.
    """
    ok, reason = check_twin_graph(g)
    if not ok:
        raise NotTwinGraphError(reason)
    return len(twin_pairs(g))
