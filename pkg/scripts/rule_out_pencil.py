"""Sample GammaData in every terminal case and tally the Cok gamma splittings."""

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from surf610.p1sheaf import CASES, EXPECTED_SPLITTINGS, pencil_case_verdict, random_gamma


@dataclass
class PencilConfig:
    per_case: int = 20
    seed: int = 0


def main(cfg: PencilConfig) -> int:
    rng = random.Random(cfg.seed)
    bad = 0
    for case in CASES:
        tally = Counter()
        for _ in range(cfg.per_case):
            v = pencil_case_verdict(random_gamma(case, rng))
            tally[v.cok_gamma.degrees] += 1
            bad += (not v.ruled_out) or v.cok_gamma.degrees not in EXPECTED_SPLITTINGS[case]
        shown = ", ".join(f"{d}: {n}" for d, n in sorted(tally.items()))
        print(f"{case:>8}  {shown}")
    print("all ruled out" if bad == 0 else f"{bad} unexpected samples")
    return 1 if bad else 0


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--per-case", type=int, default=PencilConfig.per_case)
    ap.add_argument("--seed", type=int, default=PencilConfig.seed)
    a = ap.parse_args()
    raise SystemExit(main(PencilConfig(a.per_case, a.seed)))
