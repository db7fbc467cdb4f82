"""Quivers, the Euler form and the lattice maps between dimension vectors and weights.

Vectors (dimension vectors, lattice vectors, weights) are plain tuples indexed
in the *declaration order* of the quiver's vertices.  Matrices are lists of
rows indexed in the quiver's *canonical topological order*, and act on column
vectors: column ``i`` of ``M`` holds the image of the basis vector at vertex
``x_i``, so ``M[j][i]`` is the number of arrows ``x_i -> x_j``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple, Sequence

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class QuiverError(ValueError):
    pass


class QuiverParseError(QuiverError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CyclicQuiverError(QuiverError):
    def __init__(self, cycle: Sequence[str]):
        super().__init__("cyclic quiver: " + " -> ".join(cycle))
        self.cycle = tuple(cycle)


class DimensionMismatchError(QuiverError):
    pass


class InconsistencyError(AssertionError):
    """A mathematical guarantee failed to hold; signals a bug, never bad input."""


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple((s, t) for s, t in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverError(f"duplicate vertex in {self.vertices}")
        known = set(self.vertices)
        for s, t in self.arrows:
            if s not in known or t not in known:
                raise QuiverError(f"arrow {s} -> {t} has an unknown endpoint")
        # raises CyclicQuiverError
        self.order  # noqa: B018

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def index(self) -> dict[str, int]:
        return {name: i for i, name in enumerate(self.vertices)}

    @cached_property
    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        """Arrows as (source, target) positions in declaration order."""
        return tuple((self.index[s], self.index[t]) for s, t in self.arrows)

    @cached_property
    def order(self) -> tuple[str, ...]:
        return tuple(topological_order(self))

    @cached_property
    def order_indices(self) -> tuple[int, ...]:
        """Declaration positions of the vertices, listed in canonical order."""
        return tuple(self.index[x] for x in self.order)

    @cached_property
    def sources(self) -> tuple[str, ...]:
        """Vertices without incoming arrows, in declaration order."""
        targets = {t for _, t in self.arrows}
        return tuple(x for x in self.vertices if x not in targets)

    def multiplicity(self, source: str, target: str) -> int:
        return sum(1 for a in self.arrows if a == (source, target))

    def vector(self, values: dict[str, int] | Sequence[int]) -> tuple:
        """Normalize a name-keyed mapping or a declaration-order sequence to a tuple."""
        if isinstance(values, dict):
            if set(values) != set(self.vertices):
                raise DimensionMismatchError(f"keys {sorted(values)} do not match vertices")
            return tuple(values[x] for x in self.vertices)
        values = tuple(values)
        if len(values) != len(self.vertices):
            raise DimensionMismatchError(
                f"expected {len(self.vertices)} entries, got {len(values)}"
            )
        return values

    def as_dict(self, vec: Sequence[int]) -> dict[str, int]:
        return dict(zip(self.vertices, self.vector(vec)))

    def canonical_key(self, vec: Sequence[int]) -> tuple:
        """Reorder a vector into canonical order (sort key for enumerations)."""
        return tuple(vec[i] for i in self.order_indices)


def parse_quiver(text: str) -> Quiver:
    vertices = None
    arrows = []
    arrow_lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise QuiverParseError(lineno, f"expected 'key: value', got {raw.strip()!r}")
        key = key.strip()
        names = rest.split()
        for name in names:
            if not _NAME.match(name):
                raise QuiverParseError(lineno, f"invalid vertex name {name!r}")
        if key == "vertices":
            if vertices is not None:
                raise QuiverParseError(lineno, "more than one 'vertices:' line")
            if arrows:
                raise QuiverParseError(lineno, "'vertices:' must precede all arrows")
            if not names:
                raise QuiverParseError(lineno, "no vertices declared")
            seen = set()
            for name in names:
                if name in seen:
                    raise QuiverParseError(lineno, f"duplicate vertex name {name!r}")
                seen.add(name)
            vertices = names
        elif key == "arrow":
            if vertices is None:
                raise QuiverParseError(lineno, "arrow before 'vertices:' line")
            if len(names) != 2:
                raise QuiverParseError(lineno, "an arrow needs exactly a source and a target")
            for name in names:
                if name not in vertices:
                    raise QuiverParseError(lineno, f"unknown endpoint {name!r}")
            arrows.append((names[0], names[1]))
            arrow_lines.append(lineno)
        else:
            raise QuiverParseError(lineno, f"unknown key {key!r}")
    if vertices is None:
        raise QuiverParseError(0, "missing 'vertices:' line")
    return Quiver(tuple(vertices), tuple(arrows))


def topological_order(Q: Quiver) -> list[str]:
    """Kahn's algorithm; among ready vertices the earliest declared comes first."""
    indeg = {x: 0 for x in Q.vertices}
    out: dict[str, list[str]] = {x: [] for x in Q.vertices}
    for s, t in Q.arrows:
        indeg[t] += 1
        out[s].append(t)
    position = {x: i for i, x in enumerate(Q.vertices)}
    ready = [x for x in Q.vertices if indeg[x] == 0]
    order = []
    while ready:
        ready.sort(key=position.__getitem__)
        x = ready.pop(0)
        order.append(x)
        for y in out[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    if len(order) < len(Q.vertices):
        raise CyclicQuiverError(_find_cycle(Q, set(Q.vertices) - set(order)))
    return order


def _find_cycle(Q: Quiver, remaining: set[str]) -> list[str]:
    # every remaining vertex has an incoming arrow from another remaining vertex
    pred = {}
    for s, t in Q.arrows:
        if s in remaining and t in remaining and t not in pred:
            pred[t] = s
    x = min(remaining, key=Q.vertices.index)
    seen = []
    while x not in seen:
        seen.append(x)
        x = pred[x]
    cycle = seen[seen.index(x):][::-1]
    return cycle + [cycle[0]]


def reverse(Q: Quiver) -> Quiver:
    return Quiver(Q.vertices, tuple((t, s) for s, t in Q.arrows))


def pairing(weight: Sequence, vec: Sequence) -> int:
    return sum(s * a for s, a in zip(weight, vec))


def euler_form(Q: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    a = Q.vector(a)
    b = Q.vector(b)
    value = sum(x * y for x, y in zip(a, b))
    for s, t in Q.arrow_indices:
        value -= a[s] * b[t]
    return value


def l1_apply(Q: Quiver, a: Sequence[int]) -> tuple:
    """The weight ``L1(a)`` with ``<L1(a), xi> = euler_form(a, xi)`` for all xi."""
    a = Q.vector(a)
    out = list(a)
    for s, t in Q.arrow_indices:
        out[t] -= a[s]
    return tuple(out)


def l2_apply(Q: Quiver, b: Sequence[int]) -> tuple:
    """The weight ``L2(b)`` with ``<L2(b), xi> = euler_form(xi, b)`` for all xi."""
    b = Q.vector(b)
    out = list(b)
    for s, t in Q.arrow_indices:
        out[s] -= b[t]
    return tuple(out)


def multiplicity_matrix(Q: Quiver) -> list[list[int]]:
    """``M[j][i]`` = number of arrows from ``x_i`` to ``x_j`` (canonical order)."""
    pos = {x: k for k, x in enumerate(Q.order)}
    K = len(Q)
    M = [[0] * K for _ in range(K)]
    for s, t in Q.arrows:
        M[pos[t]][pos[s]] += 1
    return M


def path_matrix(Q: Quiver) -> list[list[int]]:
    """``P = (I - M)^{-1}``; ``P[j][i]`` counts directed paths from ``x_i`` to ``x_j``."""
    M = multiplicity_matrix(Q)
    K = len(M)
    P = [[int(i == j) for i in range(K)] for j in range(K)]
    # P = I + M P, solved column by column along the lower-triangular structure
    for i in range(K):
        for j in range(i + 1, K):
            P[j][i] = sum(M[j][l] * P[l][i] for l in range(i, j))
    return P


def mat_vec(A: Sequence[Sequence], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def l1_inverse(Q: Quiver, s: Sequence) -> tuple:
    """Solve ``l1_apply(A) = s`` as ``A = P Iso(s)``; entries may be negative."""
    s = Q.vector(s)
    P = path_matrix(Q)
    A_canon = mat_vec(P, Q.canonical_key(s))
    out = [0] * len(Q)
    for k, i in enumerate(Q.order_indices):
        out[i] = A_canon[k]
    return tuple(out)


class Restriction(NamedTuple):
    quiver: Quiver | None
    dim: tuple
    weight: tuple | None
    kept: tuple[int, ...]

    @property
    def empty(self) -> bool:
        return not self.kept


def restrict_support(Q: Quiver, n: Sequence[int], s: Sequence | None = None) -> Restriction:
    """Drop the vertices with ``n_x = 0`` and every arrow touching them.

    When nothing survives, ``quiver`` is None and ``empty`` is set.
    """
    n = Q.vector(n)
    if s is not None:
        s = Q.vector(s)
    kept = tuple(i for i, d in enumerate(n) if d > 0)
    names = [Q.vertices[i] for i in kept]
    keep = set(names)
    sub = None
    if names:
        sub = Quiver(tuple(names), tuple(a for a in Q.arrows if a[0] in keep and a[1] in keep))
    return Restriction(
        sub,
        tuple(n[i] for i in kept),
        None if s is None else tuple(s[i] for i in kept),
        kept,
    )
