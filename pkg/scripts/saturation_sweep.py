"""Cone membership vs. constructed witnesses over a grid of dimension vectors and weights.

    python scripts/saturation_sweep.py --quivers A2 Kronecker --nmax 3 --smax 3
"""
import argparse
import itertools
import time
from dataclasses import dataclass, field

from quiversat.cone import in_cone
from quiversat.grids import NAMED
from quiversat.schofield import SchofieldSession
from quiversat.semiinvariant import Witness, saturation_witness


@dataclass
class SweepConfig:
    quivers: list = field(default_factory=lambda: ["A2", "Kronecker", "A3", "Theta"])
    nmax: int = 3
    smax: int = 3
    seed: int = 0


def sweep(cfg: SweepConfig):
    rows = []
    for name in cfg.quivers:
        Q = NAMED[name]()
        s = SchofieldSession(Q)
        t0 = time.perf_counter()
        members = witnesses = mismatches = 0
        largest = 0
        for n in itertools.product(range(1, cfg.nmax + 1), repeat=len(Q)):
            for sigma in itertools.product(range(-cfg.smax, cfg.smax + 1), repeat=len(Q)):
                member = in_cone(s, n, sigma).member
                wit = saturation_witness(s, n, sigma, seed=cfg.seed)
                found = isinstance(wit, Witness)
                members += member
                witnesses += found
                mismatches += member != found
                if found:
                    largest = max(largest, sum(a * b for a, b in zip(wit.A, wit.w.dims)))
        rows.append((name, members, witnesses, mismatches, largest, time.perf_counter() - t0))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quivers", nargs="+", default=SweepConfig().quivers, choices=sorted(NAMED))
    ap.add_argument("--nmax", type=int, default=3)
    ap.add_argument("--smax", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    cfg = SweepConfig(**vars(ap.parse_args()))
    print(f"{'quiver':<10} {'members':>8} {'witnesses':>10} {'mismatch':>9} {'max D':>6} {'secs':>6}")
    for name, m, w, bad, d, secs in sweep(cfg):
        print(f"{name:<10} {m:>8} {w:>10} {bad:>9} {d:>6} {secs:>6.2f}")


if __name__ == "__main__":
    main()
