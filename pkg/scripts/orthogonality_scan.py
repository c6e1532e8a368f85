#!/usr/bin/env python3
"""Scan Gram-matrix orthogonality quality over random parameter tuples.

For each draw, builds the degree-N Gram matrix on the tetrahedron and
reports the worst normalized off-diagonal entry and the worst relative
deviation of the diagonal from the interval-norm product formula.

Usage:
    python scripts/orthogonality_scan.py [--N 4] [--draws 20] [--seed 7]
"""

import argparse
import random
import sys
from fractions import Fraction

import numpy as np

from simplexpoly import quadrature


def random_params(rng) -> tuple:
    pool = [Fraction(-1, 2), Fraction(-1, 4), Fraction(0), Fraction(1, 3),
            Fraction(1, 2), Fraction(1), Fraction(2), Fraction(5, 2)]
    return tuple(rng.choice(pool) for _ in range(6))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--N", type=int, default=4)
    parser.add_argument("--draws", type=int, default=20)
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    worst_off = worst_diag = 0.0
    for _ in range(args.draws):
        params = random_params(rng)
        idxs, gram = quadrature.gram_matrix(args.N, params)
        off = quadrature.gram_offdiag_max(idxs, gram)
        expected = quadrature.expected_gram_diagonal(idxs, params)
        diag = float(np.abs(np.diag(gram) / expected - 1).max())
        worst_off = max(worst_off, off)
        worst_diag = max(worst_diag, diag)
        label = ",".join(str(v) for v in params)
        print(f"params=({label:<30}) offdiag={off:.3e} diag_rel={diag:.3e}")
    print(f"worst offdiag {worst_off:.3e}   worst diag_rel {worst_diag:.3e}")
    return 0 if worst_off <= 1e-10 and worst_diag <= 1e-10 else 1


if __name__ == "__main__":
    sys.exit(main())
