"""Singular cone-point counts of seeded random surfaces at several primes."""

import argparse
from dataclasses import dataclass, field

from surf610.sampling import random_surface
from surf610.scan import DEFAULT_PRIMES, multi_prime_scan


@dataclass
class ScanConfig:
    seeds: list[int] = field(default_factory=lambda: [1, 2, 3, 4, 5])
    primes: list[int] = field(default_factory=lambda: list(DEFAULT_PRIMES))
    jobs: int = 1


def main(cfg: ScanConfig) -> None:
    for seed in cfg.seeds:
        pair, nf, _ = random_surface(seed)
        summary = multi_prime_scan(pair, cfg.primes, cfg.jobs)
        counts = "  ".join(f"p={p}: {n:>3}" for p, n in sorted(summary.counts.items()))
        flag = "  singular at every prime" if summary.likely_singular_over_q else ""
        print(f"seed {seed:>3}  alpha0={nf.alpha0}  {counts}{flag}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="+", default=ScanConfig().seeds)
    ap.add_argument("--primes", type=int, nargs="+", default=ScanConfig().primes)
    ap.add_argument("--jobs", type=int, default=1)
    a = ap.parse_args()
    main(ScanConfig(a.seeds, a.primes, a.jobs))
