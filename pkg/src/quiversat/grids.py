"""Named quivers and the small parameter grids used by the test suite and scripts."""
from __future__ import annotations

import itertools

from .quiver import Quiver


def a2() -> Quiver:
    return Quiver(("u", "v"), (("u", "v"),))


def kronecker(m: int = 2) -> Quiver:
    return Quiver(("u", "v"), (("u", "v"),) * m)


def a3() -> Quiver:
    return Quiver(("u", "v", "w"), (("u", "v"), ("v", "w")))


def three_vertex(m12: int, m13: int, m23: int) -> Quiver:
    arrows = (("x1", "x2"),) * m12 + (("x1", "x3"),) * m13 + (("x2", "x3"),) * m23
    return Quiver(("x1", "x2", "x3"), arrows)


def theta() -> Quiver:
    return three_vertex(1, 1, 1)


NAMED = {"A2": a2, "Kronecker": kronecker, "A3": a3, "Theta": theta}


def small_quivers(max_vertices: int = 3, max_arrows: int = 3) -> list[tuple[str, Quiver]]:
    """Every acyclic quiver up to the given size, one per isomorphism class.

    Names list the multiplicities of the pairs ``(i, j)``, ``i < j``, of a
    topological labelling, e.g. ``K3[1,0,2]`` for m12=1, m13=0, m23=2.
    """
    out = []
    for K in range(1, max_vertices + 1):
        pairs = list(itertools.combinations(range(K), 2))
        seen = set()
        for mults in itertools.product(range(max_arrows + 1), repeat=len(pairs)):
            if sum(mults) > max_arrows:
                continue
            edges = [pair for pair, m in zip(pairs, mults) for _ in range(m)]
            canon = min(
                tuple(sorted((perm[s], perm[t]) for s, t in edges))
                for perm in itertools.permutations(range(K))
            )
            if canon in seen:
                continue
            seen.add(canon)
            names = tuple(f"x{i + 1}" for i in range(K))
            Q = Quiver(names, tuple((names[s], names[t]) for s, t in edges))
            out.append((f"K{K}[{','.join(map(str, mults))}]", Q))
    return out


def dim_grid(K: int, lo: int, hi: int):
    return itertools.product(range(lo, hi + 1), repeat=K)
