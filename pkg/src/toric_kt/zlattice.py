"""Exact integer linear algebra on small lattices.

Matrices are plain tuples of row tuples holding Python ints, so there is no
overflow however large the SNF pivots grow.  Rational helpers (``Fraction``
based) live here too because the cone tests need exact coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def as_matrix(rows: Sequence[Sequence[int]], cols: int | None = None) -> Matrix:
    """Normalise a nested sequence to an immutable row-major matrix."""
    out = tuple(tuple(int(x) for x in r) for r in rows)
    widths = {len(r) for r in out}
    if len(widths) > 1:
        raise ValueError(f"ragged matrix: row lengths {sorted(widths)}")
    if cols is not None and out and len(out[0]) != cols:
        raise ValueError(f"expected {cols} columns, got {len(out[0])}")
    return out


def shape(A: Matrix, cols: int | None = None) -> tuple[int, int]:
    if not A:
        return 0, (cols or 0)
    return len(A), len(A[0])


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> Matrix:
    return tuple((0,) * cols for _ in range(rows))


def transpose(A: Matrix, cols: int | None = None) -> Matrix:
    r, c = shape(A, cols)
    return tuple(tuple(A[i][j] for i in range(r)) for j in range(c))


def matmul(A: Matrix, B: Matrix) -> Matrix:
    if A and B and len(A[0]) != len(B):
        raise ValueError(f"shape mismatch: {shape(A)} @ {shape(B)}")
    Bt = transpose(B)
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


def matvec(A: Matrix, v: Sequence[int]) -> tuple:
    return tuple(sum(a * x for a, x in zip(row, v)) for row in A)


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum(a * b for a, b in zip(u, v))


def det(A: Matrix) -> int:
    """Determinant by fraction-free Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    M = [list(r) for r in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


@dataclass(frozen=True)
class SnfDecomposition:
    """``U @ A @ V == D`` with ``U``, ``V`` unimodular and ``D`` in Smith form."""

    U: Matrix
    D: Matrix
    V: Matrix

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        """Diagonal entries of ``D`` (zeros included)."""
        return tuple(self.D[i][i] for i in range(min(len(self.D), len(self.D[0]) if self.D else 0)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.invariant_factors if d != 0)


def snf(A: Sequence[Sequence[int]], cols: int | None = None) -> SnfDecomposition:
    """Smith normal form with transforms.

    Pivots on the entry of smallest nonzero absolute value in the remaining
    block, which keeps coefficient growth small on the matrices used here.

    Args:
      A: integer matrix given as rows.
      cols: column count, only needed when ``A`` has no rows.

    Returns:
      ``SnfDecomposition(U, D, V)`` with ``U @ A @ V == D``, ``|det U| ==
      |det V| == 1``, ``D`` diagonal with nonnegative entries and
      ``d_i | d_{i+1}``.
    """
    A = as_matrix(A)
    m, n = shape(A, cols)
    D = [list(r) for r in A]
    U = [list(r) for r in identity(m)]
    V = [list(r) for r in identity(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row dst += k * row src
        D[dst] = [a + k * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, k):  # col dst += k * col src
        for row in D:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]

    for t in range(min(m, n)):
        while True:
            pivot = None
            for i in range(t, m):
                for j in range(t, n):
                    if D[i][j] != 0 and (pivot is None or abs(D[i][j]) < abs(D[pivot[0]][pivot[1]])):
                        pivot = (i, j)
            if pivot is None:
                break
            swap_rows(t, pivot[0])
            swap_cols(t, pivot[1])
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty |= D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty |= D[t][j] != 0
            if dirty:
                continue
            # Row/column cleared; enforce divisibility of the remaining block.
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]

    return SnfDecomposition(
        U=tuple(map(tuple, U)), D=tuple(map(tuple, D)), V=tuple(map(tuple, V))
    )


def unimodular_inverse(A: Matrix) -> Matrix:
    """Exact inverse of a square integer matrix with determinant +-1."""
    inv = rational_inverse(A)
    out = []
    for row in inv:
        if any(x.denominator != 1 for x in row):
            raise ValueError("matrix is not unimodular")
        out.append(tuple(int(x) for x in row))
    return tuple(out)


def is_part_of_basis(vectors: Sequence[Sequence[int]], rank: int | None = None) -> bool:
    """True iff ``vectors`` extend to a Z-basis of ``Z^rank``.

    Decided by the Smith form of the stacked matrix: every invariant factor
    must equal 1.

    Raises:
      ValueError: the vectors do not share one length, or there are more
        vectors than the ambient rank.
    """
    rows = as_matrix(vectors)
    if rank is None:
        if not rows:
            return True
        rank = len(rows[0])
    if rows and len(rows[0]) != rank:
        raise ValueError(f"dimension mismatch: vectors of length {len(rows[0])} in rank {rank}")
    if len(rows) > rank:
        raise ValueError(f"{len(rows)} vectors cannot be part of a basis of Z^{rank}")
    if not rows:
        return True
    d = snf(rows).invariant_factors
    return len(d) == len(rows) and all(x == 1 for x in d)


def kernel_basis(A: Sequence[Sequence[int]], cols: int | None = None) -> list[Vector]:
    """Z-basis of ``{x : A x = 0}``; empty when the kernel is trivial.

    With ``U A V = D`` the kernel is spanned by the columns of ``V`` past the
    rank of ``D``.
    """
    A = as_matrix(A)
    _, n = shape(A, cols)
    if not A:
        return [tuple(r) for r in identity(n)]
    dec = snf(A)
    r = dec.rank
    return [tuple(dec.V[i][j] for i in range(n)) for j in range(r, n)]


def primitive(v: Sequence[int]) -> Vector:
    """``v / gcd(v)``; sign is preserved."""
    g = 0
    for x in v:
        g = gcd(g, int(x))
    if g == 0:
        raise ValueError("zero vector has no primitive generator")
    return tuple(int(x) // g for x in v)


def is_primitive(v: Sequence[int]) -> bool:
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g == 1


def complete_to_basis(vectors: Sequence[Sequence[int]], rank: int) -> Matrix:
    """Rows: the given vectors followed by a complement to a Z-basis.

    The vectors must be part of a basis.  From ``U B V = [I | 0]`` one gets
    ``B = U^-1 (first rows of V^-1)``, so the remaining rows of ``V^-1``
    complete ``B``.
    """
    rows = as_matrix(vectors)
    k = len(rows)
    if not rows:
        return identity(rank)
    if not is_part_of_basis(rows, rank):
        raise ValueError("vectors are not part of a lattice basis")
    Vinv = unimodular_inverse(snf(rows).V)
    return rows + Vinv[k:]


def unimodular_with_first_column(v: Sequence[int]) -> Matrix:
    """A unimodular matrix whose first column is the primitive vector ``v``."""
    return transpose(complete_to_basis([v], len(v)))


def express_in_lattice(basis: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...] | None:
    """Integer coefficients ``c`` with ``sum c_i basis_i == v``, or None.

    The basis vectors need to be linearly independent.
    """
    B = as_matrix(basis)
    if not B:
        return () if all(x == 0 for x in v) else None
    sol = rational_solve(transpose(B), [Fraction(x) for x in v])
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


# -- exact rational helpers -------------------------------------------------


def _rref(M: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    M = [row[:] for row in M]
    rows = len(M)
    cols = len(M[0]) if M else 0
    pivots = []
    r = 0
    for c in range(cols):
        p = next((i for i in range(r, rows) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(rows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return M, pivots


def rational_rank(A: Sequence[Sequence]) -> int:
    if not A:
        return 0
    return len(_rref([[Fraction(x) for x in row] for row in A])[1])


def rational_solve(A: Sequence[Sequence], b: Sequence) -> tuple[Fraction, ...] | None:
    """One solution of ``A x = b`` over Q (free variables set to 0), or None."""
    if not A:
        return None if any(x != 0 for x in b) else ()
    n = len(A[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(A, b)]
    R, piv = _rref(aug)
    if n in piv:
        return None
    x = [Fraction(0)] * n
    for i, c in enumerate(piv):
        x[c] = R[i][n]
    return tuple(x)


def rational_inverse(A: Sequence[Sequence]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(A)
    aug = [
        [Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
        for i, row in enumerate(A)
    ]
    R, piv = _rref(aug)
    if piv[:n] != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(row[n:]) for row in R)
