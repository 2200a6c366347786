"""Compositions, subsets of [n-1], permutations and descents.

Conventions used throughout the package:

* A composition is a plain tuple of positive ints, e.g. ``(1, 2, 1)``.
* A permutation is a tuple in one-line notation over ``1..n``.
  ``compose(u, v)`` is ``u o v``, i.e. ``i -> u(v(i))``.
* An :class:`IndexSet` is a subset of ``[n-1]`` stored as a bit mask where
  bit ``i - 1`` stands for the element ``i``.

Enumeration orders are fixed: compositions come from a binary counter on the
cut set (mask 0, 1, 2, ... mapped through :func:`gaps`), permutations come in
lexicographic one-line order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

# Group-algebra work is hopeless long before this; bit masks stay small.
MAX_N = 16

Composition = tuple[int, ...]
Permutation = tuple[int, ...]


def check_n(n: int) -> int:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if n > MAX_N:
        raise ValueError(f"n={n} exceeds the supported maximum {MAX_N}")
    return n


@dataclass(frozen=True)
class IndexSet:
    """A subset of ``[n-1]``."""

    n: int
    mask: int = 0

    def __post_init__(self):
        check_n(self.n)
        if self.mask < 0 or self.mask >> max(self.n - 1, 0):
            raise ValueError(f"mask {self.mask:#b} is not a subset of [{self.n - 1}]")

    @classmethod
    def from_members(cls, n: int, members: Iterable[int]) -> IndexSet:
        mask = 0
        for i in members:
            if not 1 <= i <= n - 1:
                raise ValueError(f"{i} is not in [1, {n - 1}]")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> IndexSet:
        return cls(n, (1 << max(n - 1, 0)) - 1)

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(i + 1 for i in range(max(self.n - 1, 0)) if self.mask >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __len__(self) -> int:
        return bin(self.mask).count("1")

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n - 1 and bool(self.mask >> (i - 1) & 1)

    def issubset(self, other: IndexSet) -> bool:
        return self.mask & ~other.mask == 0

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.members)) + "}"


def is_composition(alpha, n: int | None = None) -> bool:
    if not isinstance(alpha, tuple) or not all(isinstance(a, int) and a >= 1 for a in alpha):
        return False
    return n is None or sum(alpha) == n


def check_composition(alpha, n: int | None = None) -> Composition:
    alpha = tuple(alpha)
    if not is_composition(alpha, n):
        target = "" if n is None else f" of {n}"
        raise ValueError(f"{alpha} is not a composition{target}")
    return alpha


def gaps(J: IndexSet) -> Composition:
    """Lengths of the intervals into which ``J`` cuts ``[n]``."""
    if J.n == 0:
        return ()
    cuts = (0, *J.members, J.n)
    return tuple(b - a for a, b in zip(cuts, cuts[1:]))


def gaps_inv(alpha: Composition) -> IndexSet:
    """Partial sums of ``alpha``, excluding the total."""
    alpha = check_composition(alpha)
    n = sum(alpha)
    return IndexSet.from_members(n, itertools.accumulate(alpha[:-1]))


def rev(alpha: Composition) -> Composition:
    return tuple(reversed(alpha))


def sub(J: IndexSet) -> IndexSet:
    """Reflection ``{n - j : j in J}``."""
    return IndexSet.from_members(J.n, (J.n - j for j in J.members))


# -- permutations -----------------------------------------------------------


def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def longest_word(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def is_permutation(w) -> bool:
    return tuple(sorted(w)) == tuple(range(1, len(w) + 1))


def check_permutation(w) -> Permutation:
    w = tuple(w)
    if not is_permutation(w):
        raise ValueError(f"{w} is not a permutation in one-line notation")
    return w


def compose(u: Permutation, v: Permutation) -> Permutation:
    """The product ``u o v`` (apply ``v`` first)."""
    if len(u) != len(v):
        raise ValueError("permutations of different degree")
    return tuple(u[i - 1] for i in v)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, wi in enumerate(w, start=1):
        out[wi - 1] = i
    return tuple(out)


def cycle(n: int, *elements: int) -> Permutation:
    """The cycle ``elements[0] -> elements[1] -> ... -> elements[0]`` in S_n."""
    w = list(range(1, n + 1))
    for a, b in zip(elements, elements[1:] + elements[:1]):
        w[a - 1] = b
    return tuple(w)


def descent_set(w: Permutation) -> IndexSet:
    n = len(w)
    return IndexSet.from_members(n, (i for i in range(1, n) if w[i - 1] > w[i]))


def enumerate_permutations(n: int) -> Iterator[Permutation]:
    """All of S_n in lexicographic one-line order."""
    check_n(n)
    return itertools.permutations(range(1, n + 1))


def enumerate_index_sets(n: int) -> Iterator[IndexSet]:
    check_n(n)
    for mask in range(1 << max(n - 1, 0)):
        yield IndexSet(n, mask)


def enumerate_compositions(n: int) -> Iterator[Composition]:
    """All compositions of ``n``, via a binary counter on the cut set."""
    for J in enumerate_index_sets(n):
        yield gaps(J)


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``n`` in decreasing-part form."""
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in partitions(n - first, first):
            yield (first, *rest)


def format_composition(alpha: Composition) -> str:
    return ",".join(map(str, alpha))


def parse_composition(text: str, n: int | None = None) -> Composition:
    """Parse ``"a1,a2,...,ak"``; the empty string is the empty composition."""
    text = text.strip().strip("()")
    if not text:
        return check_composition((), n)
    try:
        parts = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise ValueError(f"cannot parse composition {text!r}") from None
    return check_composition(parts, n)


def parse_index_set(text: str, n: int) -> IndexSet:
    """Parse ``"{1,3}"``."""
    body = text.strip()
    if not (body.startswith("{") and body.endswith("}")):
        raise ValueError(f"subset must look like '{{1,3}}', got {text!r}")
    body = body[1:-1].strip()
    members = [int(t) for t in body.split(",")] if body else []
    return IndexSet.from_members(n, members)
