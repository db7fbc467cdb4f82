"""Compare the Schofield recursion with the exhaustive finite-field oracle on every small quiver."""
import argparse
import itertools
import time
from dataclasses import dataclass

from quiversat.grids import small_quivers
from quiversat.oracle import brute_is_sub
from quiversat.schofield import SchofieldSession


@dataclass
class OracleConfig:
    max_vertices: int = 3
    max_arrows: int = 3
    max_dim: int = 2
    p: int = 3
    ext: int = 2


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for name, default in vars(OracleConfig()).items():
        ap.add_argument(f"--{name.replace('_', '-')}", type=int, default=default)
    cfg = OracleConfig(**vars(ap.parse_args()))
    total = 0
    t0 = time.perf_counter()
    for name, Q in small_quivers(cfg.max_vertices, cfg.max_arrows):
        s = SchofieldSession(Q)
        disagree = []
        for n in itertools.product(range(cfg.max_dim + 1), repeat=len(Q)):
            for a in itertools.product(*(range(d + 1) for d in n)):
                total += 1
                if s.is_sub(a, n) != brute_is_sub(Q, a, n, cfg.p, cfg.ext):
                    disagree.append((a, n))
        print(f"{name:<14} {'ok' if not disagree else disagree}")
    print(f"{total} pairs over F_{cfg.p}^{cfg.ext} in {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
