"""Exact scalar fields: the rationals and prime fields.

Coefficient vectors are numpy arrays. Over QQ they have dtype ``object`` and
hold Python ``int`` (when integral) or ``Fraction`` values; over GF(p) they
are ``int64`` arrays reduced into ``[0, p)``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

# Products of two residues must fit in int64.
MAX_PRIME = 2**31 - 1


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    i = 3
    while i * i <= p:
        if p % i == 0:
            return False
        i += 2
    return True


class RationalField:
    """The field QQ of exact rationals."""

    name = "Q"
    characteristic = 0
    dtype = object

    def __call__(self, x) -> int | Fraction:
        if isinstance(x, str):
            x = Fraction(x.strip())
        elif isinstance(x, (np.integer,)):
            x = int(x)
        if isinstance(x, bool):
            x = int(x)
        if isinstance(x, int):
            return x
        x = Fraction(x)
        return x.numerator if x.denominator == 1 else x

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def zeros(self, shape) -> np.ndarray:
        out = np.empty(shape, dtype=object)
        out.fill(0)
        return out

    def array(self, values) -> np.ndarray:
        values = list(values)
        out = np.empty(len(values), dtype=object)
        for i, v in enumerate(values):
            out[i] = self(v)
        return out

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        # Demote integral Fractions back to int so the int64 fast paths apply.
        if arr.dtype != object:
            return arr.astype(object)
        flat = arr.reshape(-1)
        for i, v in enumerate(flat):
            if type(v) is Fraction and v.denominator == 1:
                flat[i] = v.numerator
        return arr

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero in Q")
        return self(Fraction(1) / Fraction(x))

    def div(self, x, y):
        return self(Fraction(x) / Fraction(y))

    def is_zero(self, x) -> bool:
        return x == 0

    def to_str(self, x) -> str:
        x = self(x)
        return str(x)

    def __repr__(self) -> str:
        return "QQ"

    def __eq__(self, other) -> bool:
        return isinstance(other, RationalField)

    def __hash__(self) -> int:
        return hash("Q")


class PrimeField:
    """The prime field GF(p) for a prime ``p < 2**31``."""

    dtype = np.int64

    def __init__(self, p: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p > MAX_PRIME:
            raise ValueError(f"prime {p} too large (max {MAX_PRIME})")
        self.p = p
        self.characteristic = p
        self.name = f"F{p}"

    def __call__(self, x) -> int:
        if isinstance(x, str):
            x = Fraction(x.strip())
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def zeros(self, shape) -> np.ndarray:
        return np.zeros(shape, dtype=np.int64)

    def array(self, values) -> np.ndarray:
        return np.array([self(v) for v in values], dtype=np.int64)

    def reduce(self, arr: np.ndarray) -> np.ndarray:
        if arr.dtype == object:
            arr = np.array([self(v) for v in arr.reshape(-1)], dtype=np.int64).reshape(arr.shape)
        return np.mod(arr, self.p)

    def inv(self, x) -> int:
        x = int(x) % self.p
        if x == 0:
            raise ZeroDivisionError(f"inverse of zero in GF({self.p})")
        return pow(x, -1, self.p)

    def div(self, x, y) -> int:
        return int(x) * self.inv(y) % self.p

    def is_zero(self, x) -> bool:
        return int(x) % self.p == 0

    def to_str(self, x) -> str:
        return str(int(x) % self.p)

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("F", self.p))


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p: int) -> PrimeField:
    return PrimeField(p)


Field = RationalField | PrimeField


def parse_field(name: str, p: int | None = None) -> Field:
    """Map a CLI-style field name ("Q" or "Fp") to a field object."""
    if name in ("Q", "QQ"):
        return QQ
    if name in ("Fp", "F", "GF"):
        if p is None:
            raise ValueError("field Fp requires a prime p")
        return GF(p)
    raise ValueError(f"unknown field {name!r}")
