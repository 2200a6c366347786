"""Minimal polynomials of T_1 and w0 T_1 over Q for a range of n."""

import argparse
import time

from descalg import group_algebra as ga
from descalg.exact_linalg import krylov_min_poly
from descalg.knapsack import L_set


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=6)
    args = parser.parse_args()
    for n in range(2, args.max_n + 1):
        started = time.perf_counter()
        T = ga.top_to_random(n, 1)
        plain = krylov_min_poly(T)
        reverse = krylov_min_poly(ga.w0(n) * T)
        ok = sorted(reverse.integer_roots()) == L_set(n)
        print(f"n={n}  T1: {plain.factored()}")
        print(f"     w0T1: {reverse.factored()}  matches L(n): {ok}  ({time.perf_counter() - started:.2f}s)")


if __name__ == "__main__":
    main()
