"""King's cone of weights of semi-invariants, and the passage from weights to dimension vectors."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .quiver import InconsistencyError, euler_form, l1_inverse, pairing
from .schofield import SchofieldSession

MEMBER = "member"
VIOLATED_EQUALITY = "violated-equality"
VIOLATED_INEQUALITY = "violated-inequality"


@dataclass(frozen=True)
class ConeDescription:
    """``<sigma, n> = 0`` and ``<sigma, beta> >= 0`` for every listed ``beta``.

    ``inequalities`` holds every Schofield quotient dimension vector of ``n``,
    including the trivial ``0`` and the redundant ``n``; no facet reduction.
    """

    n: tuple
    equality: tuple
    inequalities: tuple[tuple, ...]


@dataclass(frozen=True)
class ConeDecision:
    verdict: str
    certificate: tuple | int | Fraction | None = None

    @property
    def member(self) -> bool:
        return self.verdict == MEMBER


def cone_description(session: SchofieldSession, n) -> ConeDescription:
    n = session._dim(n)
    return ConeDescription(n, n, tuple(session.quotdims(n)))


def in_cone(session: SchofieldSession, n, s: Sequence) -> ConeDecision:
    """Decide membership; rational weights are accepted.

    On failure the certificate is ``<sigma, n>`` for the equality, or the first
    violated ``beta`` in enumeration order.
    """
    Q = session.quiver
    n = session._dim(n)
    s = Q.vector(s)
    value = pairing(s, n)
    if value != 0:
        return ConeDecision(VIOLATED_EQUALITY, value)
    # Same verdict and certificate as scanning cone_description(n).inequalities,
    # but only vectors with a negative pairing get the quotient test.
    for beta in sorted(itertools.product(*(range(d + 1) for d in n)), key=Q.canonical_key):
        if pairing(s, beta) < 0 and session.is_quot(n, beta):
            return ConeDecision(VIOLATED_INEQUALITY, beta)
    return ConeDecision(MEMBER)


def sigma_to_A(session: SchofieldSession, n, s: Sequence) -> tuple:
    """The dimension vector ``A`` with ``l1_apply(A) = sigma`` for an integral cone member.

    ``n`` must be entrywise positive (restrict the support first).
    """
    Q = session.quiver
    n = session._dim(n)
    s = Q.vector(s)
    if any(d <= 0 for d in n):
        raise ValueError("sigma_to_A needs an entrywise positive dimension vector")
    if any(isinstance(x, Fraction) and x.denominator != 1 for x in s):
        raise ValueError(f"weight {s} is not integral")
    s = tuple(int(x) for x in s)
    decision = in_cone(session, n, s)
    if not decision.member:
        raise ValueError(f"weight {s} is not in the cone for {n}: {decision}")
    A = l1_inverse(Q, s)
    if any(x < 0 for x in A):
        raise InconsistencyError(f"cone member {s} gave a non-dimension vector {A}")
    if euler_form(Q, A, n) != 0:
        raise InconsistencyError(f"euler_form({A}, {n}) != 0")
    for gamma in session.quotdims(n):
        if euler_form(Q, A, gamma) < 0:
            raise InconsistencyError(f"euler_form({A}, {gamma}) < 0")
    return A
