"""Exact linear algebra over integral domains.

Matrices are lists of rows.  Entries may be ``int``, ``Fraction`` or any
exact ring element supporting ``+ - *``, comparison with ``0`` and exact
division ``/`` (e.g. :class:`chasles.polynomials.LaurentPolynomial`).
Nothing here ever produces a float.
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Sequence


def _is_zero(x) -> bool:
    return x == 0


def _lift(matrix) -> list[list]:
    return [[Fraction(x) if isinstance(x, int) else x for x in row] for row in matrix]


def bareiss_determinant(matrix: Sequence[Sequence]):
    """Determinant by Bareiss fraction-free elimination.

    All intermediate divisions are exact in the entry domain, so polynomial
    entries never leave the polynomial ring.
    """
    n = len(matrix)
    if n == 0:
        return 1
    a = _lift(matrix)
    if any(len(row) != n for row in a):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if _is_zero(a[k][k]):
            for i in range(k + 1, n):
                if not _is_zero(a[i][k]):
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0 * a[0][0]
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) / prev
            row_i[k] = 0 * pivot
        prev = pivot
    det = a[n - 1][n - 1]
    return det if sign == 1 else -det


def fraction_free_echelon(matrix: Sequence[Sequence]):
    """Row echelon form by fraction-free elimination.

    Returns ``(echelon_rows, pivot_columns)``; only the first ``rank`` rows are
    returned.  Entries of the result are minors of the input, so they stay in
    the entry domain.
    """
    a = _lift(matrix)
    if not a:
        return [], []
    nrows, ncols = len(a), len(a[0])
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if not _is_zero(a[i][c])), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            aic = a[i][c]
            for j in range(c + 1, ncols):
                a[i][j] = (a[i][j] * p - aic * a[r][j]) / prev
            a[i][c] = 0 * p
        prev = p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(matrix: Sequence[Sequence]) -> int:
    return len(fraction_free_echelon(matrix)[1])


def nullspace(matrix: Sequence[Sequence], ncols: int | None = None,
              normalize: bool = True) -> list[list]:
    """Basis of the right kernel of ``matrix``.

    Uses fraction-free echelon form followed by Cramer's rule on the pivot
    block, so each basis vector has entries in the entry domain.  Vector ``k``
    is supported on the pivot columns plus the ``k``-th free column.  With
    ``normalize`` (rational entries only) every vector is scaled so its free
    column entry is 1, which makes the basis reduced with respect to the free
    columns.
    """
    if ncols is None:
        if not matrix:
            raise ValueError("ncols is required for an empty matrix")
        ncols = len(matrix[0])
    if not matrix:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    echelon, pivots = fraction_free_echelon(matrix)
    r = len(pivots)
    free = [c for c in range(ncols) if c not in set(pivots)]
    block = [[row[c] for c in pivots] for row in echelon]
    det = bareiss_determinant(block)
    zero = 0 * det
    basis = []
    for f in free:
        rhs = [-row[f] for row in echelon]
        vec = [zero] * ncols
        vec[f] = det
        for i, pc in enumerate(pivots):
            replaced = [row[:i] + [rhs[k]] + row[i + 1:] for k, row in enumerate(block)]
            vec[pc] = bareiss_determinant(replaced) if r else zero
        if normalize and all(isinstance(x, (int, Fraction)) for x in vec):
            vec = [Fraction(x) / Fraction(det) for x in vec]
        basis.append(vec)
    return basis


# --- integer lattice helpers -------------------------------------------------

def vgcd(values) -> int:
    return reduce(gcd, (abs(int(v)) for v in values), 0)


def primitive(vector: Sequence[int]) -> tuple[int, ...]:
    g = vgcd(vector)
    if g == 0:
        raise ValueError("zero vector has no primitive form")
    return tuple(int(v) // g for v in vector)


def normal_vector(vectors: Sequence[Sequence[int]]) -> tuple[int, ...]:
    """Integer vector orthogonal to ``d-1`` vectors in ``Z^d`` (generalized cross product).

    Entry ``i`` is the signed maximal minor with column ``i`` deleted; the
    result is zero iff the vectors are linearly dependent.
    """
    d = len(vectors) + 1
    out = []
    for i in range(d):
        minor = [[Fraction(v[j]) for j in range(d) if j != i] for v in vectors]
        m = bareiss_determinant(minor)
        out.append(int(m) * (-1) ** i)
    return tuple(out)


def unimodular_completion(v: Sequence[int]) -> list[list[int]]:
    """Unimodular integer matrix ``U`` (columns) with ``v . U[:,0] = 1`` and ``v . U[:,j] = 0`` for ``j > 0``.

    ``v`` must be primitive.  Built from extended-gcd column operations, so
    the result is deterministic.
    """
    d = len(v)
    row = [int(x) for x in v]
    if vgcd(row) != 1:
        raise ValueError(f"{tuple(v)} is not primitive")
    cols = [[1 if i == j else 0 for i in range(d)] for j in range(d)]  # cols[j] = column j

    def combine(j, k, a, b, c, e):
        # (col_j, col_k) <- (a col_j + b col_k, c col_j + e col_k), det = ae - bc = +-1
        cj, ck = cols[j], cols[k]
        cols[j] = [a * x + b * y for x, y in zip(cj, ck)]
        cols[k] = [c * x + e * y for x, y in zip(cj, ck)]
        rj, rk = row[j], row[k]
        row[j], row[k] = a * rj + b * rk, c * rj + e * rk

    for k in range(1, d):
        a0, b0 = row[0], row[k]
        if b0 == 0:
            continue
        g, s, t = _xgcd(a0, b0)
        # s*a0 + t*b0 = g; second column (-b0/g)*col0 + (a0/g)*colk kills the entry
        combine(0, k, s, t, -b0 // g, a0 // g)
    if row[0] == -1:
        cols[0] = [-x for x in cols[0]]
        row[0] = 1
    return [[cols[j][i] for j in range(d)] for i in range(d)]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def integer_inverse(matrix: Sequence[Sequence[int]]) -> list[list[int]]:
    """Inverse of a unimodular integer matrix (Gauss-Jordan over Q, checked integral)."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for c in range(n):
        p = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if p is None:
            raise ValueError("singular matrix")
        aug[c], aug[p] = aug[p], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    inv = [row[n:] for row in aug]
    if any(x.denominator != 1 for row in inv for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in inv]


def matvec(matrix: Sequence[Sequence[int]], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(a * b for a, b in zip(row, v)) for row in matrix)
