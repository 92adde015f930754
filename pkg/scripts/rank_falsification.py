"""Randomized search for higher-rank primes containing the generator bends.

For generators whose vanishing locus has dimension d, no prime of rank above
d + 1 should contain every generator's bend relations.  This script hammers
that bound with random admissible matrices and reports any hit (a hit would
be a genuine finding, not noise: membership is decided exactly).

Usage:
    python scripts/rank_falsification.py --trials 10000 --seed 0
"""

import argparse
import random

from tropica.krull import contains_bends, coordinate_dimension
from tropica.parsing import parse_polynomial
from tropica.polynomials import LAURENT
from tropica.sampling import random_admissible

EXAMPLES = [
    ["x + 1", "y + 2"],
    ["x + y + 0"],
    ["x + y + z + 0"],
]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=10_000)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    rng = random.Random(args.seed)
    findings = 0
    for texts in EXAMPLES:
        n = max(parse_polynomial(t).n for t in texts)
        gens = [parse_polynomial(t, LAURENT, n) for t in texts]
        d = coordinate_dimension(gens).variety_dim
        if d + 2 > n + 1:
            print(f"gens={texts}: no rank above {d + 1} exists in {n + 1} rows, skipping")
            continue
        hits = []
        for _ in range(args.trials):
            rank = rng.randint(d + 2, n + 1)
            matrix = random_admissible(rng, n, rank)
            if contains_bends(matrix, gens):
                hits.append(matrix)
        findings += len(hits)
        print(f"gens={texts}: d={d}, {args.trials} trials at ranks {d + 2}..{n + 1}, hits={len(hits)}")
        for matrix in hits:
            print(f"  FLAGGED: rank-{matrix.rank} matrix {matrix.to_json()}")
    if findings:
        raise SystemExit(f"{findings} flagged finding(s); the rank bound looks violated")
    print("no higher-rank prime contained the bends")


if __name__ == "__main__":
    main()
