"""Exact integer linear algebra: matrices, characteristic polynomials, rank.

Everything here runs on Python's arbitrary-precision integers.  Krylov
columns grow like (2n)^(n-1) and fraction-free pivots overflow 64-bit words
even for ten-vertex graphs, so no fixed-width arithmetic (and no floating
point) is used anywhere.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable rectangular matrix with integer entries."""

    __slots__ = ("entries", "rows", "cols")

    def __init__(self, entries: Iterable[Sequence[int]]):
        rows = tuple(tuple(int(x) for x in row) for row in entries)
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged rows")
        else:
            width = 0
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def column(cls, values: Sequence[int]) -> "IntMatrix":
        return cls([[int(v)] for v in values])

    def __getitem__(self, ij) -> int:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.entries)

    def tolists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> "IntMatrix":
        return IntMatrix(zip(*self.entries)) if self.rows else IntMatrix([])

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.shape} @ {other.shape}")
        bt = list(zip(*other.entries))
        return IntMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in bt] for row in self.entries]
        )

    def __mul__(self, scalar: int) -> "IntMatrix":
        return IntMatrix([[scalar * x for x in row] for row in self.entries])

    __rmul__ = __mul__

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return IntMatrix(
            [[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.entries, other.entries)]
        )

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-1) * other

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in row) for row in self.entries)
        return f"IntMatrix({self.rows}x{self.cols}: [{body}])"


def hstack(*mats: IntMatrix) -> IntMatrix:
    if len({m.rows for m in mats}) != 1:
        raise ValueError("row count mismatch")
    return IntMatrix(
        [sum((list(m.entries[i]) for m in mats), []) for i in range(mats[0].rows)]
    )


def vstack(*mats: IntMatrix) -> IntMatrix:
    if len({m.cols for m in mats}) != 1:
        raise ValueError("column count mismatch")
    return IntMatrix([row for m in mats for row in m.entries])


class IntPolynomial:
    """Univariate polynomial with integer coefficients, stored ascending.

    The zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def leading_coefficient(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __call__(self, x: int) -> int:
        return eval_at_integer(self, x)

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        if self.is_zero:
            return "IntPolynomial(0)"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            if k == 0:
                t = str(abs(c))
            else:
                mag = "" if abs(c) == 1 else f"{abs(c)}*"
                t = f"{mag}x" if k == 1 else f"{mag}x^{k}"
            terms.append(("- " if c < 0 else "+ ") + t)
        body = " ".join(terms)
        return f"IntPolynomial({body[2:] if body.startswith('+ ') else '-' + body[2:]})"


def char_poly(m: IntMatrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M), computed division-free.

    Uses the Berkowitz recurrence so every intermediate stays an integer;
    O(n^4) and perfectly adequate for the matrix sizes in this package.
    Returns a monic polynomial whose roots are the eigenvalues of ``m``
    with algebraic multiplicity.
    """
    if not m.is_square:
        raise ValueError(f"matrix is {m.rows}x{m.cols}, not square")
    n = m.rows
    if n == 0:
        return IntPolynomial([1])
    a = m.entries
    # coefficients in descending order for the leading principal submatrices
    c = [1, -a[0][0]]
    for i in range(1, n):
        row = a[i][:i]
        col = [a[j][i] for j in range(i)]
        # Toeplitz column t_k: 1, -a[i][i], then -(row . A^{k-2} . col)
        t = [1, -a[i][i]]
        v = col
        for k in range(2, i + 2):
            t.append(-sum(row[j] * v[j] for j in range(i)))
            if k < i + 1:
                v = [sum(a[r][j] * v[j] for j in range(i)) for r in range(i)]
        new = [0] * (i + 2)
        for deg in range(i + 2):
            acc = 0
            lo = max(0, deg - len(t) + 1)
            for j in range(lo, min(deg, len(c) - 1) + 1):
                acc += t[deg - j] * c[j]
            new[deg] = acc
        c = new
    c.reverse()
    return IntPolynomial(c)


def eval_at_integer(p: IntPolynomial, x: int) -> int:
    """Exact Horner evaluation of ``p`` at the integer ``x``."""
    acc = 0
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


def _content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


def _primitive(cs: list[int]) -> list[int]:
    g = _content(cs)
    if g > 1:
        return [c // g for c in cs]
    return cs


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    """Pseudo-remainder of a by b (coefficients ascending, b nonzero)."""
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        dr = len(r) - 1
        lead = r[-1]
        r = [lb * c for c in r]
        shift = dr - db
        for i, bc in enumerate(b):
            r[shift + i] -= lead * bc
        while r and r[-1] == 0:
            r.pop()
    return r


def is_squarefree(p: IntPolynomial) -> bool:
    """True iff ``p`` has no repeated complex root.

    Equivalent to deg gcd(p, p') = 0; the gcd is computed with a primitive
    pseudo-remainder sequence so everything stays in the integers.
    """
    if p.is_zero:
        raise ValueError("squarefreeness is undefined for the zero polynomial")
    if p.degree <= 1:
        return True
    a = _primitive(list(p.coeffs))
    b = _primitive([i * c for i, c in enumerate(p.coeffs)][1:])
    while b:
        a, b = b, _primitive(_pseudo_rem(a, b))
    return len(a) == 1


def rank(m: IntMatrix) -> int:
    """Rank over the rationals via fraction-free (Bareiss) elimination."""
    return _rank_rows(m.tolists())


def _rank_rows(rows: list[list[int]]) -> int:
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    rk = 0
    prev = 1
    for col in range(ncols):
        piv = None
        for r in range(rk, nrows):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        rows[rk], rows[piv] = rows[piv], rows[rk]
        p = rows[rk][col]
        top = rows[rk]
        for r in range(rk + 1, nrows):
            cur = rows[r]
            f = cur[col]
            for j in range(col + 1, ncols):
                cur[j] = (p * cur[j] - f * top[j]) // prev
            cur[col] = 0
        prev = p
        rk += 1
        if rk == nrows:
            break
    return rk


def det(m: IntMatrix) -> int:
    """Exact determinant by fraction-free elimination."""
    if not m.is_square:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    rows = m.tolists()
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = None
        for r in range(k, n):
            if rows[r][k]:
                piv = r
                break
        if piv is None:
            return 0
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        top = rows[k]
        for r in range(k + 1, n):
            cur = rows[r]
            f = cur[k]
            for j in range(k + 1, n):
                cur[j] = (p * cur[j] - f * top[j]) // prev
            cur[k] = 0
        prev = p
    return sign * rows[n - 1][n - 1]
