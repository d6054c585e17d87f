"""Print the Hilbert series next to Riemann-Roch and the oracle on random pairs."""

import argparse
import random
from dataclasses import dataclass

from surf610.hilbert import chi_riemann_roch, ci_hilbert_series, quotient_dim_oracle
from surf610.sampling import random_pair


@dataclass
class TableConfig:
    max_degree: int = 12
    pairs: int = 3
    seed: int = 0


def main(cfg: TableConfig) -> None:
    h = ci_hilbert_series(cfg.max_degree)
    rng = random.Random(cfg.seed)
    pairs = [random_pair(rng) for _ in range(cfg.pairs)]
    print(f"{'n':>3} {'c_n':>5} {'chi':>5} " + " ".join(f"{'pair' + str(i):>6}" for i in range(cfg.pairs)))
    for n in range(cfg.max_degree + 1):
        oracle = " ".join(f"{quotient_dim_oracle(p, n):>6}" for p in pairs)
        print(f"{n:>3} {h[n]:>5} {chi_riemann_roch(n):>5} {oracle}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=TableConfig.max_degree)
    ap.add_argument("--pairs", type=int, default=TableConfig.pairs)
    ap.add_argument("--seed", type=int, default=TableConfig.seed)
    a = ap.parse_args()
    main(TableConfig(a.max_degree, a.pairs, a.seed))
