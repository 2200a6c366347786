"""Compare the minimal polynomial of w0 T_1 over GF(p) with the reduction of the rational one."""

import argparse

from descalg import theorems as th


def primes_up_to(m: int) -> list[int]:
    return [p for p in range(2, m + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-n", type=int, default=5)
    parser.add_argument("--max-p", type=int, default=11)
    args = parser.parse_args()
    bounds = th.Bounds.override(args.max_n)
    print("n  p   same_as_Q  coefficients (lowest degree first)")
    for n in range(2, args.max_n + 1):
        for p in primes_up_to(args.max_p):
            r = th.verify_ttr_finite_field(n, p, bounds)
            coeffs = " ".join(r.details["min_poly"]["coefficients"])
            print(f"{n}  {p:<3} {str(r.details['equals_rational_reduction']):<10} {coeffs}")


if __name__ == "__main__":
    main()
