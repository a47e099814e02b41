#!/usr/bin/env python3
"""Right-nilpotency index growth for the square-free monomial truncations.

The k-variable truncation with the degree derivation gives a derived
product whose right-power chain vanishes only after k + 1 steps, so the
index grows without bound with k: the finite truncations witness that the
untruncated construction is not right-nilpotent.
"""

import argparse

from novikov.constructions import example1_algebra, gd_construct
from novikov.ideals import chain


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=5)
    args = parser.parse_args()
    print(f"{'k':>3} {'dim':>5} {'right-nilpotency index':>24}")
    previous = 0
    for k in range(1, args.max_k + 1):
        B, d = example1_algebra(k)
        A = gd_construct(B, d, check=False)
        index = chain(A, "right").index
        marker = "strictly up" if index > previous else "NOT increasing!"
        print(f"{k:>3} {A.dim:>5} {index:>24}   {marker}")
        previous = index


if __name__ == "__main__":
    main()
