"""Exact dense linear algebra on lists of rows: integers, rationals, and F_p."""
from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence

Matrix = list[list]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence], inner: int | None = None) -> Matrix:
    """Product of an (r x k) and a (k x c) matrix; ``inner`` is needed when k or c is 0."""
    rows = len(A)
    k = len(B) if inner is None else inner
    cols = len(B[0]) if B else 0
    return [[sum(A[i][l] * B[l][j] for l in range(k)) for j in range(cols)] for i in range(rows)]


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in M]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def det(M: Sequence[Sequence]):
    """Exact determinant; rational rows are cleared to integers first.

    Returns an ``int`` for integer input and a ``Fraction`` otherwise.
    """
    scale = 1
    rows = []
    rational = False
    for row in M:
        dens = [x.denominator for x in row if isinstance(x, Fraction)]
        if dens:
            rational = True
            d = lcm(*dens)
            scale *= d
            rows.append([int(x * d) for x in row])
        else:
            rows.append(list(row))
    value = bareiss_det(rows)
    return Fraction(value, scale) if rational else value


def cofactor_det(M: Sequence[Sequence]):
    """Laplace expansion along the first row; exponential, for cross-checks only."""
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    total = 0
    for j in range(n):
        if M[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in M[1:]]
        term = M[0][j] * cofactor_det(minor)
        total += -term if j % 2 else term
    return total


def inverse(M: Sequence[Sequence], p: int | None = None) -> Matrix:
    """Gauss-Jordan inverse over Q (``p is None``) or over F_p."""
    n = len(M)
    if p is None:
        a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
             for i, row in enumerate(M)]
    else:
        a = [[x % p for x in row] + [int(i == j) for j in range(n)] for i, row in enumerate(M)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c] if p is None else pow(a[c][c], -1, p)
        a[c] = [x * inv for x in a[c]] if p is None else [x * inv % p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                if p is None:
                    a[r] = [x - f * y for x, y in zip(a[r], a[c])]
                else:
                    a[r] = [(x - f * y) % p for x, y in zip(a[r], a[c])]
    out = [row[n:] for row in a]
    if p is None:
        out = [[int(x) if x.denominator == 1 else x for x in row] for row in out]
    return out


def rank_mod_p(rows: Sequence[Sequence[int]], p: int) -> int:
    a = [[x % p for x in row] for row in rows]
    if not a:
        return 0
    ncols = len(a[0])
    rank = 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][c], -1, p)
        a[rank] = [x * inv % p for x in a[rank]]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c]
                a[r] = [(x - f * y) % p for x, y in zip(a[r], a[rank])]
        rank += 1
    return rank
