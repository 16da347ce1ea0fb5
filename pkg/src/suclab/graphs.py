"""Graph types and their matrices.

Vertices are labelled 0..n-1.  ``SimpleGraph`` is undirected, unweighted and
loop-free; ``WeightedDigraph`` carries nonnegative integer arc weights and is
the type of quotient graphs.  Both are immutable and safe to share across
threads or processes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .linalg import IntMatrix

MAX_VERTICES = 62  # single-byte graph6 size range; every analysis here has n <= 13


class SimpleGraph:
    """Undirected simple graph on vertices 0..n-1.

    Adjacency is kept as one bitmask per vertex, which makes twin detection,
    traversal and degree counting cheap.
    """

    __slots__ = ("n", "masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside supported range 1..{MAX_VERTICES}")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "masks", tuple(masks))
        object.__setattr__(
            self,
            "_edges",
            tuple(
                (u, v)
                for u in range(n)
                for v in range(u + 1, n)
                if masks[u] >> v & 1
            ),
        )

    def __setattr__(self, name, value):
        raise AttributeError("SimpleGraph is immutable")

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "SimpleGraph":
        g = object.__new__(cls)
        n = len(masks)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "masks", tuple(masks))
        object.__setattr__(
            g,
            "_edges",
            tuple((u, v) for u in range(n) for v in range(u + 1, n) if masks[u] >> v & 1),
        )
        return g

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.masks[u] >> v & 1)

    def neighbors(self, u: int) -> tuple[int, ...]:
        m = self.masks[u]
        return tuple(v for v in range(self.n) if m >> v & 1)

    def degree(self, u: int) -> int:
        return self.masks[u].bit_count()

    def relabel(self, perm: Sequence[int]) -> "SimpleGraph":
        """Graph whose position-i vertex is vertex ``perm[i]`` of self."""
        inv = [0] * self.n
        for i, p in enumerate(perm):
            inv[p] = i
        return SimpleGraph(self.n, [(inv[u], inv[v]) for u, v in self._edges])

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimpleGraph) and self.n == other.n and self.masks == other.masks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.masks))

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={list(self._edges)})"


class WeightedDigraph:
    """Directed graph with nonnegative integer arc weights and no loops."""

    __slots__ = ("n", "weights")

    def __init__(self, weights: Iterable[Sequence[int]]):
        w = tuple(tuple(int(x) for x in row) for row in weights)
        n = len(w)
        if any(len(row) != n for row in w):
            raise ValueError("weight matrix must be square")
        for i in range(n):
            if w[i][i] != 0:
                raise ValueError(f"nonzero diagonal weight at vertex {i}")
            if any(x < 0 for x in w[i]):
                raise ValueError(f"negative weight in row {i}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "weights", w)

    def __setattr__(self, name, value):
        raise AttributeError("WeightedDigraph is immutable")

    def weight(self, u: int, v: int) -> int:
        return self.weights[u][v]

    def arcs(self) -> tuple[tuple[int, int, int], ...]:
        return tuple(
            (u, v, w)
            for u, row in enumerate(self.weights)
            for v, w in enumerate(row)
            if w
        )

    def out_degree(self, u: int) -> int:
        return sum(self.weights[u])

    def adjacency_matrix(self) -> IntMatrix:
        return IntMatrix(self.weights)

    def laplacian_matrix(self) -> IntMatrix:
        n = self.n
        return IntMatrix(
            [
                [
                    self.out_degree(i) if i == j else -self.weights[i][j]
                    for j in range(n)
                ]
                for i in range(n)
            ]
        )

    def __eq__(self, other) -> bool:
        return isinstance(other, WeightedDigraph) and self.weights == other.weights

    def __hash__(self) -> int:
        return hash(self.weights)

    def __repr__(self) -> str:
        return f"WeightedDigraph(n={self.n}, arcs={list(self.arcs())})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> SimpleGraph:
    """Simple graph on ``n`` vertices with the given edges (duplicates collapse)."""
    return SimpleGraph(n, edges)


def adjacency(g: SimpleGraph) -> IntMatrix:
    n = g.n
    return IntMatrix([[g.masks[i] >> j & 1 for j in range(n)] for i in range(n)])


def degree_matrix(g: SimpleGraph) -> IntMatrix:
    n = g.n
    return IntMatrix(
        [[g.degree(i) if i == j else 0 for j in range(n)] for i in range(n)]
    )


def laplacian(g: SimpleGraph) -> IntMatrix:
    """Laplacian matrix L = D - A.  Symmetric, rows sum to zero."""
    n = g.n
    return IntMatrix(
        [
            [g.degree(i) if i == j else -(g.masks[i] >> j & 1) for j in range(n)]
            for i in range(n)
        ]
    )


def laplacian_rows(g: SimpleGraph) -> list[list[int]]:
    """Laplacian as plain row lists, for hot paths that avoid IntMatrix."""
    n = g.n
    return [
        [g.degree(i) if i == j else -(g.masks[i] >> j & 1) for j in range(n)]
        for i in range(n)
    ]


def degree_in(g: SimpleGraph | WeightedDigraph, u: int, cell: Iterable[int]) -> int:
    """Weighted out-degree of ``u`` into the vertex set ``cell``."""
    if isinstance(g, SimpleGraph):
        mask = 0
        for v in cell:
            mask |= 1 << v
        return (g.masks[u] & mask).bit_count()
    row = g.weights[u]
    return sum(row[v] for v in cell)


def is_connected(g: SimpleGraph) -> bool:
    """Reachability of every vertex from vertex 0."""
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        m = frontier
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            nxt |= g.masks[v]
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def to_dot(
    g: SimpleGraph | WeightedDigraph, labels: Sequence[str] | None = None
) -> str:
    """DOT text; digraph arcs carry label=<weight>."""
    def name(i: int) -> str:
        return f'"{labels[i]}"' if labels else str(i)

    lines = []
    if isinstance(g, SimpleGraph):
        lines.append("graph {")
        for v in range(g.n):
            lines.append(f"  {name(v)};")
        for u, v in g.edges:
            lines.append(f"  {name(u)} -- {name(v)};")
    else:
        lines.append("digraph {")
        for v in range(g.n):
            lines.append(f"  {name(v)};")
        for u, v, w in g.arcs():
            lines.append(f"  {name(u)} -> {name(v)} [label={w}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
