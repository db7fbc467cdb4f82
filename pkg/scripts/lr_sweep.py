"""Littlewood-Richardson positivity through the cone, against tableaux counts, with scaling."""
import argparse
import itertools
import time
from dataclasses import dataclass

from quiversat.lr import lr_positive, lr_saturation_table
from quiversat.oracle import lr_coefficient


@dataclass
class LRConfig:
    rows: int = 3
    cols: int = 3
    nmax: int = 3


def box_partitions(rows, cols):
    for parts in itertools.product(range(cols + 1), repeat=rows):
        if all(x >= y for x, y in zip(parts, parts[1:])):
            yield tuple(x for x in parts if x)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--rows", type=int, default=3)
    ap.add_argument("--cols", type=int, default=3)
    ap.add_argument("--nmax", type=int, default=3)
    cfg = LRConfig(**vars(ap.parse_args()))
    parts = list(box_partitions(cfg.rows, cfg.cols))
    t0 = time.perf_counter()
    triples = positive = bad = 0
    for lam, mu, nu in itertools.product(parts, repeat=3):
        if sum(nu) != sum(lam) + sum(mu):
            continue
        triples += 1
        c = lr_coefficient(lam, mu, nu)
        positive += c > 0
        table = lr_saturation_table(lam, mu, nu, cfg.nmax)
        if lr_positive(lam, mu, nu) != (c > 0) or len({ok for _, ok in table}) != 1:
            bad += 1
            print("disagreement:", lam, mu, nu, c, table)
    print(f"{triples} triples, {positive} with c > 0, {bad} disagreements, {time.perf_counter() - t0:.1f}s")


if __name__ == "__main__":
    main()
