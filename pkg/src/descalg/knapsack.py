"""Knapsack numbers of faces, their signed and weighted variants, and spectra.

``knapsack_number(alpha, F)`` counts the faces ``G`` of type ``alpha`` with
``F`` contained in ``G``; it is computed literally, by filtering the faces of
type ``alpha``. :func:`knapsack_number_packing` counts the same thing as the
number of ways to drop the blocks of ``F`` into labelled bags of sizes
``alpha_1, ..., alpha_k`` and serves as an independent cross-check.
"""

from __future__ import annotations

import json
from random import Random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from . import combinatorics as cb
from .combinatorics import Composition
from .face_monoid import Face, contains, enumerate_faces, face_type, faces_of_type, ordered_bell
from .fields import QQ


# -- weights -----------------------------------------------------------------


@dataclass(frozen=True)
class WeightVector:
    """Nonnegative rational weights ``gamma_alpha`` on the compositions of n (default 0)."""

    n: int
    weights: Mapping[Composition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for alpha, g in dict(self.weights).items():
            alpha = cb.check_composition(alpha, self.n)
            g = QQ(g)
            if g < 0:
                raise ValueError(f"weight of {alpha} is negative ({g})")
            if g:
                clean[alpha] = g
        object.__setattr__(self, "weights", clean)

    @classmethod
    def indicator(cls, alpha: Composition) -> WeightVector:
        return cls(sum(alpha), {tuple(alpha): 1})

    @classmethod
    def random(cls, n: int, rng: Random, max_num: int = 5, max_den: int = 4,
               density: float = 0.6) -> WeightVector:
        weights = {}
        for alpha in cb.enumerate_compositions(n):
            if rng.random() < density:
                weights[alpha] = Fraction(rng.randint(0, max_num), rng.randint(1, max_den))
        return cls(n, weights)

    @classmethod
    def from_json(cls, n: int, text: str) -> WeightVector:
        """Parse ``{"composition-string": "rational-string"}``; unknown compositions are errors."""
        raw = json.loads(text)
        if not isinstance(raw, dict):
            raise ValueError("weight file must hold a JSON object")
        weights = {}
        for key, value in raw.items():
            weights[cb.parse_composition(key, n)] = Fraction(str(value))
        return cls(n, weights)

    def to_json(self) -> str:
        return json.dumps({cb.format_composition(a): str(g) for a, g in self.items()})

    def __getitem__(self, alpha: Composition):
        return self.weights.get(tuple(alpha), 0)

    def items(self) -> list[tuple[Composition, Fraction]]:
        return sorted(self.weights.items(), key=lambda kv: cb.gaps_inv(kv[0]).mask)

    def reversed(self) -> WeightVector:
        return WeightVector(self.n, {cb.rev(a): g for a, g in self.weights.items()})


# -- knapsack numbers -----------------------------------------------------------


def _check(alpha: Composition, F: Face) -> Composition:
    alpha = cb.check_composition(alpha)
    if sum(alpha) != F.n:
        raise ValueError(f"{alpha} is not a composition of n={F.n}")
    return alpha


def knapsack_witnesses(alpha: Composition, F: Face) -> list[Face]:
    """All faces ``G`` of type ``alpha`` with ``F`` contained in ``G``."""
    alpha = _check(alpha, F)
    return [G for G in faces_of_type(alpha) if contains(F, G)]


def knapsack_number(alpha: Composition, F: Face) -> int:
    alpha = _check(alpha, F)
    return sum(1 for G in faces_of_type(alpha) if contains(F, G))


@lru_cache(maxsize=None)
def _packings(sizes: tuple[int, ...], capacities: tuple[int, ...]) -> int:
    if not sizes:
        return int(all(c == 0 for c in capacities))
    s, rest = sizes[0], sizes[1:]
    total = 0
    for i, c in enumerate(capacities):
        if c >= s:
            total += _packings(rest, capacities[:i] + (c - s,) + capacities[i + 1:])
    return total


def knapsack_number_packing(alpha: Composition, F: Face) -> int:
    """Ways to put the blocks of ``F`` into labelled bags of sizes ``alpha``."""
    alpha = _check(alpha, F)
    sizes = tuple(sorted(face_type(F), reverse=True))
    return _packings(sizes, alpha)


def sign(F: Face) -> int:
    return -1 if (F.n - len(F)) % 2 else 1


def signed_knapsack(alpha: Composition, F: Face) -> int:
    return sign(F) * knapsack_number(alpha, F)


def singleton_count(F: Face) -> int:
    """Number of blocks of size one."""
    return sum(1 for b in F.blocks if b & (b - 1) == 0)


# -- spectra ---------------------------------------------------------------------


def _value_counts(values: Iterable) -> dict:
    return dict(sorted(Counter(values).items()))


@lru_cache(maxsize=64)
def knapsack_table(alpha: Composition, method: str = "brute") -> tuple[int, ...]:
    """``n_alpha(F)`` for every face F, aligned with :func:`enumerate_faces` order.

    Containment ignores block order, so faces sharing a block set share one count.
    """
    alpha = cb.check_composition(alpha)
    count = {"brute": knapsack_number, "packing": knapsack_number_packing}[method]
    seen: dict[frozenset, int] = {}
    out = []
    for F in enumerate_faces(sum(alpha)):
        key = frozenset(F.blocks)
        if key not in seen:
            seen[key] = count(alpha, F)
        out.append(seen[key])
    return tuple(out)


def knapsack_values(alpha: Composition, method: str = "brute") -> Iterator[tuple[Face, int]]:
    """``(F, n_alpha(F))`` for every face, in canonical face order."""
    alpha = cb.check_composition(alpha)
    return zip(enumerate_faces(sum(alpha)), knapsack_table(alpha, method))


def knapsack_spectrum(alpha: Composition, method: str = "brute") -> list[int]:
    """Sorted distinct values of ``n_alpha`` over all faces."""
    return sorted({k for _, k in knapsack_values(alpha, method)})


def signed_spectrum(alpha: Composition, method: str = "brute") -> list[int]:
    return sorted({sign(F) * k for F, k in knapsack_values(alpha, method)})


def signed_multiplicities(alpha: Composition, method: str = "brute") -> dict[int, int]:
    """Number of faces attaining each signed knapsack number."""
    return _value_counts(sign(F) * k for F, k in knapsack_values(alpha, method))


def knapsack_multiplicities(alpha: Composition, method: str = "brute") -> dict[int, int]:
    return _value_counts(k for _, k in knapsack_values(alpha, method))


def filtration_level(alpha: Composition, F: Face) -> tuple[int, list[int]]:
    """Index ``i`` with ``n_alpha(F) = k_i`` and the ladder ``k_0 < ... < k_m``."""
    ladder = knapsack_spectrum(alpha)
    return ladder.index(knapsack_number(alpha, F)), ladder


def filtration(alpha: Composition) -> list[list[Face]]:
    """The chain CF_{k_0} >= CF_{k_1} >= ... of faces with ``n_alpha(F) >= k_i``."""
    values = list(knapsack_values(alpha))
    ladder = sorted({k for _, k in values})
    return [[F for F, v in values if v >= k] for k in ladder]


def L_set(n: int) -> list[int]:
    """``{-n+2} u [-n+4, n-3] u {0} u {n}``, sorted."""
    if n <= 1:
        raise ValueError("L(n) is defined for n > 1 only")
    return sorted({-n + 2, *range(-n + 4, n - 2), 0, n})


# -- weighted versions -----------------------------------------------------------


def weighted_knapsack(gamma: WeightVector, F: Face):
    return QQ(sum((g * knapsack_number(alpha, F) for alpha, g in gamma.items()), Fraction(0)))


def weighted_signed(gamma: WeightVector, F: Face):
    return QQ(sign(F) * weighted_knapsack(gamma, F))


def weighted_table(gamma: WeightVector) -> list:
    """``n_gamma(F)`` for every face, in canonical order, from the cached per-alpha tables."""
    total = [Fraction(0)] * ordered_bell(gamma.n)
    for alpha, g in gamma.items():
        for i, k in enumerate(knapsack_table(alpha)):
            total[i] += g * k
    return [QQ(v) for v in total]


def _weighted_pairs(gamma: WeightVector, signed: bool):
    for F, v in zip(enumerate_faces(gamma.n), weighted_table(gamma)):
        yield F, (QQ(sign(F) * v) if signed else v)


def weighted_spectrum(gamma: WeightVector) -> list:
    return sorted({v for _, v in _weighted_pairs(gamma, False)})


def weighted_signed_spectrum(gamma: WeightVector) -> list:
    return sorted({v for _, v in _weighted_pairs(gamma, True)})


def weighted_multiplicities(gamma: WeightVector) -> dict:
    return _value_counts(v for _, v in _weighted_pairs(gamma, False))


def weighted_signed_multiplicities(gamma: WeightVector) -> dict:
    return _value_counts(v for _, v in _weighted_pairs(gamma, True))


def spectrum_to_json(values: Iterable) -> str:
    """Sorted JSON array of integer / ``"p/q"`` strings."""
    return json.dumps([str(QQ(v)) for v in sorted(values)])
