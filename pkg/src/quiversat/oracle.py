"""Brute-force ground truth at finite scale.

``brute_is_sub`` decides "every representation of dimension n has a
subrepresentation of dimension alpha" by enumerating every representation over
a prime field F_p and searching subspace families over F_p or F_{p^2}.
``lr_coefficient`` counts Littlewood-Richardson tableaux.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

import numpy as np

from .quiver import Quiver
from .semiinvariant import Representation

FEASIBILITY_LIMIT = 10**7


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % d for d in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class FiniteField:
    """F_{p^e} for e in {1, 2}.

    Elements are encoded as integers ``c0 + c1 * p`` (coefficients of ``1`` and
    ``t``), so F_p sits inside as ``0..p-1``.  For ``e = 2``, ``t`` is a root of
    the first monic irreducible ``t^2 + a t + b`` in lexicographic order of ``(a, b)``.
    """

    p: int
    e: int = 1

    def __post_init__(self):
        if not _is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.e not in (1, 2):
            raise ValueError("only extension degrees 1 and 2 are supported")

    @property
    def q(self) -> int:
        return self.p**self.e

    @cached_property
    def modulus(self) -> tuple[int, int] | None:
        if self.e == 1:
            return None
        p = self.p
        for a in range(p):
            for b in range(p):
                if all((x * x + a * x + b) % p for x in range(p)):
                    return a, b
        raise AssertionError("no irreducible quadratic")

    def _mul(self, x: int, y: int) -> int:
        p = self.p
        if self.e == 1:
            return x * y % p
        x0, x1 = x % p, x // p
        y0, y1 = y % p, y // p
        a, b = self.modulus
        c0 = x0 * y0
        c1 = x0 * y1 + x1 * y0
        c2 = x1 * y1
        # t^2 = -a t - b
        c0 -= b * c2
        c1 -= a * c2
        return c0 % p + (c1 % p) * p

    def _add(self, x: int, y: int) -> int:
        p = self.p
        return (x % p + y % p) % p + ((x // p + y // p) % p) * p

    @cached_property
    def add(self) -> list[list[int]]:
        return [[self._add(x, y) for y in range(self.q)] for x in range(self.q)]

    @cached_property
    def mul(self) -> list[list[int]]:
        return [[self._mul(x, y) for y in range(self.q)] for x in range(self.q)]

    @cached_property
    def neg(self) -> list[int]:
        return [next(y for y in range(self.q) if self.add[x][y] == 0) for x in range(self.q)]

    def sub(self, x: int, y: int) -> int:
        return self.add[x][self.neg[y]]


def subspaces(F: FiniteField, n: int, k: int) -> list[tuple[tuple[int, ...], ...]]:
    """Every k-dimensional subspace of F^n, once each, as a reduced row-echelon basis."""
    out = []
    for pivots in itertools.combinations(range(n), k):
        pivot_set = set(pivots)
        free = [(i, j) for i, c in enumerate(pivots) for j in range(c + 1, n) if j not in pivot_set]
        for values in itertools.product(range(F.q), repeat=len(free)):
            rows = [[0] * n for _ in range(k)]
            for i, c in enumerate(pivots):
                rows[i][c] = 1
            for (i, j), val in zip(free, values):
                rows[i][j] = val
            out.append(tuple(tuple(r) for r in rows))
    return out


def gaussian_binomial(n: int, k: int, q: int) -> int:
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def _in_span(F: FiniteField, rref: Sequence[Sequence[int]], vec: Sequence[int]) -> bool:
    u = list(vec)
    for row in rref:
        c = next(j for j, x in enumerate(row) if x)
        coef = u[c]
        if coef:
            u = [F.sub(x, F.mul[coef][y]) for x, y in zip(u, row)]
    return not any(u)


def _maps_into(F: FiniteField, mat, source_basis, target_rref) -> bool:
    for b in source_basis:
        image = [0] * len(mat)
        for r, row in enumerate(mat):
            acc = 0
            for x, y in zip(row, b):
                if x and y:
                    acc = F.add[acc][F.mul[x][y]]
            image[r] = acc
        if not _in_span(F, target_rref, image):
            return False
    return True


def _check_field(r: Representation, F: FiniteField):
    if r.field != F.p:
        raise ValueError(f"representation over F_{r.field} cannot be searched over F_{F.p}^{F.e}")


def grassmannian_nonempty(Q: Quiver, r: Representation, a, search_field: FiniteField) -> bool:
    """Is there a subrepresentation of ``r`` of dimension ``a`` with coordinates in ``search_field``?"""
    _check_field(r, search_field)
    a = Q.vector(a)
    n = r.dims
    if any(x > y or x < 0 for x, y in zip(a, n)):
        return False
    touched = sorted({i for arrow in Q.arrow_indices for i in arrow}, key=Q.order_indices.index)
    choices = {i: subspaces(search_field, n[i], a[i]) for i in touched}
    incident = {i: [] for i in touched}
    for arrow, mat in zip(Q.arrow_indices, r.matrices):
        s, t = arrow
        # checked once both endpoints are assigned
        later = max(s, t, key=touched.index)
        incident[later].append((s, t, mat))
    chosen: dict[int, tuple] = {}

    def search(depth: int) -> bool:
        if depth == len(touched):
            return True
        x = touched[depth]
        for S in choices[x]:
            chosen[x] = S
            if all(_maps_into(search_field, mat, chosen[s], chosen[t]) for s, t, mat in incident[x]):
                if search(depth + 1):
                    return True
        del chosen[x]
        return False

    return search(0)


def _entry_count(Q: Quiver, n) -> int:
    return sum(n[s] * n[t] for s, t in Q.arrow_indices)


def all_representations(Q: Quiver, n, p: int):
    n = Q.vector(n)
    shapes = [(n[t], n[s]) for s, t in Q.arrow_indices]
    total = sum(r * c for r, c in shapes)
    for flat in itertools.product(range(p), repeat=total):
        mats = []
        pos = 0
        for rows, cols in shapes:
            mats.append([list(flat[pos + i * cols: pos + (i + 1) * cols]) for i in range(rows)])
            pos += rows * cols
        yield Representation(Q, n, tuple(mats), p)


def brute_is_sub(Q: Quiver, a, n, p: int = 3, extension: int = 2, method: str = "boxes") -> bool:
    """Does every representation of dimension ``n`` over F_p have an ``a``-dimensional
    subrepresentation defined over F_{p^extension}?

    ``method="enumerate"`` walks every representation and searches its quiver
    Grassmannian.  ``method="boxes"`` inverts the loops: for each subspace
    family it marks the (product-shaped) set of representations preserving it,
    then asks whether the marks cover everything.  Both are exhaustive.
    """
    a, n = Q.vector(a), Q.vector(n)
    if any(x < 0 or x > y for x, y in zip(a, n)):
        return False
    entries = _entry_count(Q, n)
    if p**entries > FEASIBILITY_LIMIT:
        raise ValueError(f"{p}^{entries} representations exceed the feasibility limit")
    F = FiniteField(p, extension)
    if method == "enumerate":
        return all(grassmannian_nonempty(Q, r, a, F) for r in all_representations(Q, n, p))
    if method != "boxes":
        raise ValueError(f"unknown method {method!r}")
    if not Q.arrows or a == n or not any(a):
        return True

    touched = sorted({i for arrow in Q.arrow_indices for i in arrow})
    choices = [subspaces(F, n[i], a[i]) for i in touched]
    slot = {i: k for k, i in enumerate(touched)}
    per_arrow = []
    for s, t in Q.arrow_indices:
        shape = (n[t], n[s])
        mats = [
            [flat[i * shape[1]:(i + 1) * shape[1]] for i in range(shape[0])]
            for flat in itertools.product(range(p), repeat=shape[0] * shape[1])
        ]
        per_arrow.append(mats)
    covered = np.zeros(tuple(len(m) for m in per_arrow), dtype=bool)
    mask_cache: dict = {}

    def mask(arrow: int, Sx, Sy) -> np.ndarray:
        s, t = Q.arrow_indices[arrow]
        key = (n[s], n[t], Sx, Sy)
        hit = mask_cache.get(key)
        if hit is None:
            hit = np.array([i for i, m in enumerate(per_arrow[arrow]) if _maps_into(F, m, Sx, Sy)], dtype=np.intp)
            mask_cache[key] = hit
        return hit

    for count, family in enumerate(itertools.product(*choices), start=1):
        idx = []
        for arrow, (s, t) in enumerate(Q.arrow_indices):
            keep = mask(arrow, family[slot[s]], family[slot[t]])
            if not len(keep):
                break
            idx.append(keep)
        else:
            covered[np.ix_(*idx)] = True
            if count % 16 == 0 and covered.all():
                return True
    return bool(covered.all())


def _partition(values: Sequence[int]) -> tuple[int, ...]:
    parts = tuple(int(x) for x in values)
    if any(x < 0 for x in parts) or any(x < y for x, y in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not a partition")
    return tuple(x for x in parts if x)


def lr_coefficient(lam: Sequence[int], mu: Sequence[int], nu: Sequence[int]) -> int:
    """Number of LR tableaux of shape nu/lam and content mu.

    Rows weakly increase, columns strictly increase, and the reverse reading
    word (rows top to bottom, each right to left) is a lattice word.
    """
    lam, mu, nu = _partition(lam), _partition(mu), _partition(nu)
    if sum(nu) != sum(lam) + sum(mu) or len(lam) > len(nu):
        return 0
    lam_full = lam + (0,) * (len(nu) - len(lam))
    if any(l > v for l, v in zip(lam_full, nu)):
        return 0
    cells = [(i, j) for i in range(len(nu)) for j in range(nu[i] - 1, lam_full[i] - 1, -1)]
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (len(mu) + 1)
    letters = len(mu)

    def place(k: int) -> int:
        if k == len(cells):
            return 1
        i, j = cells[k]
        hi = filling.get((i, j + 1), letters)  # row weakly increasing
        lo = filling.get((i - 1, j), 0) + 1  # column strictly increasing
        total = 0
        for val in range(lo, hi + 1):
            if counts[val] == mu[val - 1]:
                continue
            if val > 1 and counts[val - 1] <= counts[val]:
                continue  # lattice word
            counts[val] += 1
            filling[i, j] = val
            total += place(k + 1)
            del filling[i, j]
            counts[val] -= 1
        return total

    return place(0)
