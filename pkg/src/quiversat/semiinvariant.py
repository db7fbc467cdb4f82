"""Determinantal semi-invariants and constructive saturation witnesses.

For dimension vectors ``A``, ``B`` with ``euler_form(A, B) = 0`` and
representations ``v`` (dimension ``A``) and ``w`` (dimension ``B``), the map

    delta(Phi)_a = Phi_y v_a - w_a Phi_x        (a: x -> y)

sends ``(Hom(F_x, G_x))_x`` to ``(Hom(F_x, G_y))_a`` and is square.  Its
determinant ``C^{A,B}(v, w)`` is a semi-invariant in ``w`` of weight
``l1_apply(A)``.

Basis order: columns run over vertices in canonical order, rows over arrows in
declaration order; each block is enumerated row-major.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .cone import in_cone, sigma_to_A
from .linalg import det, identity, inverse, matmul
from .quiver import (
    DimensionMismatchError,
    InconsistencyError,
    Quiver,
    euler_form,
    l1_apply,
    l2_apply,
    restrict_support,
)
from .rng import SplitMix64
from .schofield import SchofieldSession

DEFAULT_BOUND = 10**4
DEFAULT_TRIALS = 3


@dataclass(frozen=True)
class Representation:
    """One matrix per arrow (declaration order), shaped ``dims[target] x dims[source]``.

    ``field`` is None for rational entries, or a prime ``p`` for entries in F_p
    stored as integers in ``[0, p)``.
    """

    quiver: Quiver
    dims: tuple
    matrices: tuple
    field: int | None = None

    def __post_init__(self):
        dims = tuple(self.quiver.vector(self.dims))
        object.__setattr__(self, "dims", dims)
        mats = tuple(tuple(tuple(row) for row in m) for m in self.matrices)
        object.__setattr__(self, "matrices", mats)
        if len(mats) != len(self.quiver.arrows):
            raise DimensionMismatchError("one matrix per arrow is required")
        for (s, t), m in zip(self.quiver.arrow_indices, mats):
            if len(m) != dims[t] or any(len(row) != dims[s] for row in m):
                raise DimensionMismatchError(f"matrix for arrow {s}->{t} must be {dims[t]}x{dims[s]}")


@dataclass(frozen=True)
class GroupElement:
    """One invertible square block per vertex (declaration order)."""

    blocks: tuple
    field: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(tuple(tuple(r) for r in b) for b in self.blocks))
        for b in self.blocks:
            if b and _det(b, self.field) == 0:
                raise ZeroDivisionError("group element has a singular block")

    @property
    def dims(self) -> tuple:
        return tuple(len(b) for b in self.blocks)

    def determinants(self) -> tuple:
        return tuple(_det(b, self.field) for b in self.blocks)


def _det(M, p):
    d = det(M)
    return d if p is None else d % p


def act(g: GroupElement, r: Representation) -> Representation:
    """``(g r g^{-1})_a = g_y r_a g_x^{-1}`` for every arrow ``a: x -> y``."""
    if g.dims != r.dims:
        raise DimensionMismatchError(f"group element of size {g.dims} cannot act on dims {r.dims}")
    p = r.field
    inv = [inverse(b, p) if b else [] for b in g.blocks]
    out = []
    for (s, t), m in zip(r.quiver.arrow_indices, r.matrices):
        prod = matmul(matmul(g.blocks[t], m, inner=r.dims[t]), inv[s], inner=r.dims[s])
        if p is not None:
            prod = [[x % p for x in row] for row in prod]
        out.append(prod)
    return Representation(r.quiver, r.dims, tuple(out), p)


def compose(g: GroupElement, h: GroupElement) -> GroupElement:
    return GroupElement(
        tuple(matmul(a, b, inner=len(a)) if a else () for a, b in zip(g.blocks, h.blocks)), g.field
    )


def random_representation(Q: Quiver, dims, bound: int = DEFAULT_BOUND, seed: int = 0, rng: SplitMix64 | None = None) -> Representation:
    """Entries uniform in ``[-bound, bound]``, drawn arrow by arrow, row-major.

    Pass ``rng`` to continue an existing stream instead of seeding a new one.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    dims = Q.vector(dims)
    rng = SplitMix64(seed) if rng is None else rng
    mats = []
    for s, t in Q.arrow_indices:
        mats.append([[rng.symmetric(bound) for _ in range(dims[s])] for _ in range(dims[t])])
    return Representation(Q, dims, tuple(mats))


def random_group_element(dims: Sequence[int], rng: SplitMix64, entry_bound: int = 3, den_bound: int = 3) -> GroupElement:
    """Random invertible rational blocks with small numerators and denominators."""
    blocks = []
    for d in dims:
        while True:
            b = [[Fraction(rng.symmetric(entry_bound), 1 + rng.below(den_bound)) for _ in range(d)] for _ in range(d)]
            if d == 0 or det(b) != 0:
                break
        blocks.append(b)
    return GroupElement(tuple(blocks))


@dataclass(frozen=True)
class DeltaSystem:
    A: tuple
    B: tuple
    v: Representation
    w: Representation
    matrix: list
    det: int | Fraction
    rows: tuple = field(repr=False)
    cols: tuple = field(repr=False)


def delta_system(Q: Quiver, A, B, v: Representation, w: Representation) -> DeltaSystem:
    A, B = Q.vector(A), Q.vector(B)
    if euler_form(Q, A, B) != 0:
        raise DimensionMismatchError(f"euler_form({A}, {B}) = {euler_form(Q, A, B)} != 0; delta is not square")
    if v.dims != A or w.dims != B:
        raise DimensionMismatchError("representation dimensions do not match (A, B)")
    cols = []
    col_of = {}
    for x in Q.order_indices:
        for r in range(B[x]):
            for c in range(A[x]):
                col_of[x, r, c] = len(cols)
                cols.append((Q.vertices[x], r, c))
    rows = []
    matrix = []
    for a, (x, y) in enumerate(Q.arrow_indices):
        va, wa = v.matrices[a], w.matrices[a]
        for r in range(B[y]):
            for c in range(A[x]):
                row = [0] * len(cols)
                for k in range(A[y]):
                    row[col_of[y, r, k]] += va[k][c]
                for k in range(B[x]):
                    row[col_of[x, k, c]] -= wa[r][k]
                rows.append((a, r, c))
                matrix.append(row)
    return DeltaSystem(A, B, v, w, matrix, det(matrix), tuple(rows), tuple(cols))


def determinantal(Q: Quiver, A, B, v: Representation, w: Representation):
    """``C^{A,B}(v, w)``."""
    return delta_system(Q, A, B, v, w).det


@dataclass(frozen=True)
class Nonvanishing:
    """Outcome of sampling ``C^{A,B}``.

    ``nonzero`` comes from an explicit sample; a zero verdict carries the
    Schwartz-Zippel probability that a nonzero polynomial survived every trial.
    ``schofield`` is the exact decision ``is_sub(A, A + B)``.
    """

    nonzero: bool
    schofield: bool
    det: int | Fraction | None
    v: Representation | None
    w: Representation | None
    trials_used: int
    false_zero_bound: Fraction | None

    @property
    def consistent(self) -> bool:
        return self.nonzero == self.schofield


def generic_nonvanishing(session: SchofieldSession, A, B, trials: int = DEFAULT_TRIALS,
                         bound: int = DEFAULT_BOUND, seed: int = 0) -> Nonvanishing:
    Q = session.quiver
    A, B = Q.vector(A), Q.vector(B)
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if euler_form(Q, A, B) != 0:
        raise DimensionMismatchError(f"euler_form({A}, {B}) != 0")
    schofield = session.is_sub(A, tuple(a + b for a, b in zip(A, B)))
    rng = SplitMix64(seed)
    for trial in range(1, trials + 1):
        v = random_representation(Q, A, bound, rng=rng)
        w = random_representation(Q, B, bound, rng=rng)
        value = determinantal(Q, A, B, v, w)
        if value != 0:
            return Nonvanishing(True, schofield, value, v, w, trial, None)
    degree = sum(a * b for a, b in zip(A, B))
    return Nonvanishing(False, schofield, None, None, None, trials,
                        Fraction(degree, 2 * bound + 1) ** trials)


def _character(dets: Sequence, exponents: Sequence[int]):
    value = Fraction(1)
    for d, e in zip(dets, exponents):
        value *= Fraction(d) ** e
    return value


def semi_invariance_check(Q: Quiver, A, B, v: Representation, w: Representation,
                          g: GroupElement, h: GroupElement) -> bool:
    """``C(g v g^-1, h w h^-1) == det(g)^{L2(B)} det(h)^{-L1(A)} C(v, w)``, exactly."""
    lhs = determinantal(Q, A, B, act(g, v), act(h, w))
    factor = _character(g.determinants(), l2_apply(Q, B)) * _character(
        h.determinants(), [-x for x in l1_apply(Q, A)]
    )
    return lhs == factor * determinantal(Q, A, B, v, w)


def weight_check(Q: Quiver, n, A, v: Representation, w: Representation, h: GroupElement) -> bool:
    """``p = C^{A,n}(v, .)`` obeys ``p(h w h^-1) = prod det(h_x)^{-sigma_x} p(w)`` with ``sigma = L1(A)``."""
    sigma = l1_apply(Q, A)
    lhs = determinantal(Q, A, n, v, act(h, w))
    return lhs == _character(h.determinants(), [-x for x in sigma]) * determinantal(Q, A, n, v, w)


@dataclass(frozen=True)
class Witness:
    """A nonzero semi-invariant ``C^{A,n}(v, .)`` of weight ``sigma``, with ``det = C^{A,n}(v, w)``.

    ``quiver``, ``A``, ``v`` and ``w`` live on the support of ``n``; ``n`` and
    ``sigma`` are the caller's full vectors.
    """

    n: tuple
    sigma: tuple
    quiver: Quiver | None
    support: tuple
    A: tuple
    N: tuple
    seed: int
    bound: int
    v: Representation | None
    w: Representation | None
    det: int | Fraction

    def serialize(self) -> str:
        lines = [
            f"sigma={_fmt(self.sigma)}",
            f"A={_fmt(self.A)}",
            f"seed={self.seed}",
            f"bound={self.bound}",
            f"det={self.det}",
        ]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class WitnessFailure:
    """``reason`` is ``not-in-cone`` (with the cone's certificate) or ``inconsistent``."""

    reason: str
    verdict: str | None = None
    certificate: object = None
    detail: str = ""


def _fmt(vec) -> str:
    return ",".join(str(x) for x in vec)


def saturation_witness(session: SchofieldSession, n, s, trials: int = DEFAULT_TRIALS,
                       bound: int = DEFAULT_BOUND, seed: int = 0) -> Witness | WitnessFailure:
    """Build a nonzero semi-invariant of weight ``sigma`` on representations of dimension ``n``."""
    Q = session.quiver
    n, s = Q.vector(n), Q.vector(s)
    decision = in_cone(session, n, s)
    if not decision.member:
        return WitnessFailure("not-in-cone", decision.verdict, decision.certificate)
    restricted = restrict_support(Q, n, s)
    if restricted.empty:
        # only constants live on the zero space; the constant 1 has weight 0
        return Witness(n, s, None, (), (), (), seed, bound, None, None, 1)
    sub = restricted.quiver
    sub_session = session if sub == Q else SchofieldSession(sub)
    n1, s1 = restricted.dim, restricted.weight
    try:
        A = sigma_to_A(sub_session, n1, s1)
    except InconsistencyError as exc:
        return WitnessFailure("inconsistent", detail=str(exc))
    N = tuple(a + b for a, b in zip(A, n1))
    if not sub_session.is_quot(N, n1):
        return WitnessFailure("inconsistent", detail=f"{N} does not surject onto {n1}")
    result = generic_nonvanishing(sub_session, A, n1, trials, bound, seed)
    if not result.nonzero:
        return WitnessFailure(
            "inconsistent",
            detail=f"C^(A,n) vanished on {trials} samples (false-zero bound {result.false_zero_bound})",
        )
    return Witness(n, s, sub, restricted.kept, A, N, seed, bound, result.v, result.w, result.det)


def identity_element(dims: Sequence[int]) -> GroupElement:
    return GroupElement(tuple(identity(d) for d in dims))
