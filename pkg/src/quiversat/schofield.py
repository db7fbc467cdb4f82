"""Schofield subdimension and quotient-dimension vectors, and the generic-hull data.

``alpha`` is a subdimension vector of ``n`` (every representation of
dimension ``n`` has a subrepresentation of dimension ``alpha``) exactly when
``euler_form(gamma, n - alpha) >= 0`` for every subdimension vector ``gamma``
of ``alpha``.  The recursion bottoms out at ``0`` and ``alpha = n``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .linalg import matmul, rank_mod_p
from .quiver import (
    DimensionMismatchError,
    InconsistencyError,
    Quiver,
    l2_apply,
    reverse,
    multiplicity_matrix,
    path_matrix,
)
from .rng import SplitMix64


def _box(n: tuple) -> list[tuple]:
    return list(itertools.product(*(range(d + 1) for d in n)))


def _box_size(n: Sequence[int]) -> int:
    size = 1
    for d in n:
        size *= d + 1
    return size


def _leq(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


class SchofieldSession:
    """Memoized subdimension sets for one quiver.

    The cache maps ``alpha`` to the full sorted set of subdimension vectors of
    ``alpha``; entries never change once computed.  Not safe for concurrent use.
    """

    def __init__(self, quiver: Quiver):
        self.quiver = quiver
        self._cache: dict[tuple, tuple[tuple, ...]] = {}
        self._arrays: dict[tuple, np.ndarray] = {}
        self._dual: SchofieldSession | None = None

    @property
    def dual(self) -> SchofieldSession:
        """Session on the reversed quiver, created on first use."""
        if self._dual is None:
            self._dual = SchofieldSession(reverse(self.quiver))
            self._dual._dual = self
        return self._dual

    def _dim(self, n) -> tuple:
        n = tuple(int(x) for x in self.quiver.vector(n))
        if any(x < 0 for x in n):
            raise DimensionMismatchError(f"negative dimension vector {n}")
        return n

    def _subdims(self, n: tuple) -> tuple[tuple, ...]:
        hit = self._cache.get(n)
        if hit is not None:
            return hit
        found = [a for a in _box(n) if self._admits(a, n)]
        found.sort(key=self.quiver.canonical_key)
        result = tuple(found)
        self._cache[n] = result
        self._arrays[n] = np.array(result, dtype=np.int64).reshape(len(result), len(n))
        return result

    def _admits(self, a: tuple, n: tuple) -> bool:
        if a == n or not any(a):
            return True
        beta = tuple(x - y for x, y in zip(n, a))
        # euler_form(gamma, beta) = <L2(beta), gamma>
        l2 = l2_apply(self.quiver, beta)
        if sum(x * y for x, y in zip(a, l2)) < 0:
            return False  # gamma = alpha already fails; skip the recursion
        self._subdims(a)
        return bool((self._arrays[a] @ np.array(l2, dtype=np.int64) >= 0).all())

    def subdims(self, n) -> list[tuple]:
        """All subdimension vectors of ``n``, lexicographic in canonical order."""
        return list(self._subdims(self._dim(n)))

    def is_sub(self, a, n) -> bool:
        a, n = self._dim(a), self._dim(n)
        return _leq(a, n) and self._admits(a, n)

    def is_quot(self, n, b) -> bool:
        n, b = self._dim(n), self._dim(b)
        if not _leq(b, n):
            return False
        a = tuple(x - y for x, y in zip(n, b))
        # both routes are exact; recurse below whichever vector has the smaller box
        if _box_size(b) < _box_size(a):
            return self.dual._admits(b, n)
        return self._admits(a, n)

    def quotdims(self, n) -> list[tuple]:
        n = self._dim(n)
        out = [tuple(x - y for x, y in zip(n, a)) for a in self._subdims(n)]
        out.sort(key=self.quiver.canonical_key)
        return out


@dataclass(frozen=True)
class HullData:
    """Generic hulls of single covectors in the reversed quiver.

    ``theta[x]`` is the dimension vector of the subrepresentation of a generic
    representation of the reversed quiver generated by one nonzero vector at
    ``x``.  ``t`` and ``w`` are canonical-order matrices with ``t[k][i]`` the
    component of ``theta[x_k]`` at ``x_i`` and ``w = I - t (I - m)``.
    """

    n: tuple
    theta: dict[str, tuple]
    t: list[list[int]]
    w: list[list[int]]
    m: list[list[int]]
    p: list[list[int]]


def hull_data(session: SchofieldSession, n) -> HullData:
    Q = session.quiver
    n = session._dim(n)
    if any(d <= 0 for d in n):
        raise DimensionMismatchError("hull data needs an entrywise positive dimension vector")
    K = len(Q)
    nc = Q.canonical_key(n)
    M = multiplicity_matrix(Q)
    P = path_matrix(Q)
    T = [[0] * K for _ in range(K)]
    for k in range(K):
        T[k][k] = 1
        for i in range(k - 1, -1, -1):
            # generic images of the hulls one step up sum to min(ambient, total)
            reach = sum(M[j][i] * T[k][j] for j in range(i + 1, k + 1))
            T[k][i] = min(nc[i], reach)
    IminusM = [[int(i == j) - M[i][j] for j in range(K)] for i in range(K)]
    TM = matmul(T, IminusM, inner=K)
    W = [[int(i == j) - TM[i][j] for j in range(K)] for i in range(K)]

    for i in range(K):
        for j in range(K):
            if T[i][j] > P[i][j]:
                raise InconsistencyError(f"t exceeds path count at ({i}, {j})")
            if W[i][j] < 0:
                raise InconsistencyError(f"negative entry of W at ({i}, {j})")
            if j >= i and W[i][j] != 0:
                raise InconsistencyError("W is not strictly lower triangular")

    theta = {}
    for k, x in enumerate(Q.order):
        vec = [0] * K
        for j, idx in enumerate(Q.order_indices):
            vec[idx] = T[k][j]
        vec = tuple(vec)
        if not session.is_quot(n, vec):
            raise InconsistencyError(f"theta at {x} = {vec} is not a quotient dimension of {n}")
        theta[x] = vec
    return HullData(n, theta, T, W, M, P)


def hull_sample_check(session: SchofieldSession, n, k: str, p: int = 2**31 - 1, seed: int = 0) -> tuple:
    """Dimension vector of the hull of ``e_1`` at vertex ``k`` under one random reversed representation.

    Never exceeds ``hull_data(n).theta[k]``; equals it for generic samples.
    """
    Q = session.quiver
    n = session._dim(n)
    if p <= 2**20:
        raise ValueError("sampling field must exceed 2^20")
    rng = SplitMix64(seed)
    # reversed arrow a: y -> x of the original a: x -> y carries an n_x by n_y matrix
    maps = []
    for s, t in Q.arrow_indices:
        maps.append([[rng.below(p) for _ in range(n[t])] for _ in range(n[s])])
    start = Q.index[k]
    basis: dict[int, list[list[int]]] = {i: [] for i in range(len(Q))}
    if n[start] > 0:
        basis[start] = [[1] + [0] * (n[start] - 1)]
    pos = {x: i for i, x in enumerate(Q.order_indices)}
    for i in sorted(range(len(Q)), key=pos.__getitem__, reverse=True):
        if pos[i] >= pos[start]:
            continue
        gens = []
        for (s, t), mat in zip(Q.arrow_indices, maps):
            if s == i:
                for vec in basis[t]:
                    gens.append([sum(mat[r][c] * vec[c] for c in range(n[t])) % p for r in range(n[i])])
        basis[i] = _row_basis(gens, p)
    return tuple(len(basis[i]) for i in range(len(Q)))


def _row_basis(rows: list[list[int]], p: int) -> list[list[int]]:
    out: list[list[int]] = []
    for row in rows:
        if rank_mod_p(out + [row], p) > len(out):
            out.append(row)
    return out
