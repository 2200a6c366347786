"""Signed knapsack spectra of every composition of n, with eigenspace sizes."""

import argparse

from descalg import combinatorics as cb
from descalg import knapsack as ks


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=4)
    args = parser.parse_args()
    for alpha in cb.enumerate_compositions(args.n):
        counts = ks.signed_multiplicities(alpha)
        shown = ", ".join(f"{v}:{c}" for v, c in counts.items())
        print(f"{cb.format_composition(alpha):>12}  {{{shown}}}")


if __name__ == "__main__":
    main()
