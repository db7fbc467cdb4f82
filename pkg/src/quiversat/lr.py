"""Littlewood-Richardson positivity as King-cone membership on a triple-flag quiver.

The quiver has three arms ``a1 -> ... -> a{m-1} -> c`` (likewise ``b``, ``d``)
into a central vertex ``c``; arm vertex ``i`` has dimension ``i`` and the
center has dimension ``m``.  Generic representations are triples of full flags
in ``C^m``, and semi-invariants of the arm groups are products of Plücker
minors, so arm weights are consecutive differences of highest weights:

    lam-arm  sigma_{a_i} = lam_i - lam_{i+1}
    mu-arm   sigma_{b_i} = mu_i - mu_{i+1}
    nu-arm   sigma_{d_i} = nu_{m-i} - nu_{m-i+1}      (the dual of V_nu)
    center   sigma_c = lam_m + mu_m - nu_1            (forces <sigma, n> = 0)

With ``|nu| = |lam| + |mu|`` the weight space has dimension ``c^nu_{lam,mu}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cone import in_cone
from .quiver import Quiver, pairing
from .schofield import SchofieldSession

ARMS = ("a", "b", "d")


@dataclass(frozen=True)
class FlagQuiverInstance:
    m: int
    quiver: Quiver
    n: tuple


_sessions: dict[int, SchofieldSession] = {}


def flag_quiver(m: int) -> FlagQuiverInstance:
    names = [f"{arm}{i}" for arm in ARMS for i in range(1, m)] + ["c"]
    arrows = []
    for arm in ARMS:
        chain = [f"{arm}{i}" for i in range(1, m)] + ["c"]
        arrows += list(zip(chain, chain[1:]))
    n = tuple(list(range(1, m)) * 3 + [m])
    return FlagQuiverInstance(m, Quiver(tuple(names), tuple(arrows)), n)


def _padded(part: Sequence[int], m: int) -> list[int]:
    part = [int(x) for x in part if x]
    if any(x < y for x, y in zip(part, part[1:])):
        raise ValueError(f"{part} is not a partition")
    if len(part) > m:
        raise ValueError(f"{part} has more than {m} parts")
    return part + [0] * (m - len(part))


def lr_instance(lam, mu, nu, m: int) -> tuple[FlagQuiverInstance, tuple]:
    lam, mu, nu = _padded(lam, m), _padded(mu, m), _padded(nu, m)
    if sum(nu) != sum(lam) + sum(mu):
        raise ValueError("|nu| must equal |lam| + |mu|")
    inst = flag_quiver(m)
    sigma = []
    sigma += [lam[i - 1] - lam[i] for i in range(1, m)]
    sigma += [mu[i - 1] - mu[i] for i in range(1, m)]
    sigma += [nu[m - i - 1] - nu[m - i] for i in range(1, m)]
    sigma.append(lam[m - 1] + mu[m - 1] - nu[0])
    sigma = tuple(sigma)
    assert pairing(sigma, inst.n) == 0
    return inst, sigma


def _session(inst: FlagQuiverInstance) -> SchofieldSession:
    if inst.m not in _sessions:
        _sessions[inst.m] = SchofieldSession(inst.quiver)
    return _sessions[inst.m]


def lr_positive(lam, mu, nu) -> bool:
    lam, mu, nu = ([x for x in part if x] for part in (lam, mu, nu))
    if sum(nu) != sum(lam) + sum(mu):
        return False
    m = max(1, len(lam), len(mu), len(nu))
    inst, sigma = lr_instance(lam, mu, nu, m)
    return in_cone(_session(inst), inst.n, sigma).member


def lr_saturation_table(lam, mu, nu, n_max: int) -> list[tuple[int, bool]]:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    return [
        (N, lr_positive([N * x for x in lam], [N * x for x in mu], [N * x for x in nu]))
        for N in range(1, n_max + 1)
    ]
