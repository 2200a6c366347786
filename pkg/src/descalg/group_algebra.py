"""The group algebra kS_n and the B/D bases of the descent algebra.

Multiplication follows ``(uv)(i) = u(v(i))`` everywhere. With this
convention, right multiplication ``x -> x * a`` by a nonnegative element is
the shuffle acting on positions (the "deck" reading of the elements), and left
multiplication relabels cards. Elements are stored densely over S_n in
lexicographic one-line order.
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import combinatorics as cb
from .algebra import AlgebraElement, MonoidBasis
from .combinatorics import Composition, IndexSet, Permutation
from .fields import QQ, Field

# Dense n! vectors beyond this are more than a desk can hold.
MAX_GROUP_N = 8


class SymmetricGroupBasis(MonoidBasis):
    """S_n in lexicographic one-line order, with vectorized ranking."""

    bijective = True

    def __init__(self, n: int):
        cb.check_n(n)
        if n > MAX_GROUP_N:
            raise ValueError(f"group algebra of S_{n} is too large (max n={MAX_GROUP_N})")
        self.n = n
        super().__init__(cb.enumerate_permutations(n))
        self._table = np.array(self.elements, dtype=np.int64).reshape(len(self.elements), n)
        self._radix = n ** np.arange(n - 1, -1, -1, dtype=np.int64)
        # Lexicographic order is the sort order of these base-n codes.
        self._codes = (self._table - 1) @ self._radix if n else np.zeros(1, dtype=np.int64)
        # n = 7 would need 200MB of cached columns.
        self.cache_columns = n <= 6

    @property
    def unit(self) -> Permutation:
        return cb.identity(self.n)

    def _product(self, a, b):
        return cb.compose(a, b)

    def _compute_column(self, j: int) -> np.ndarray:
        if self.n == 0:
            return np.zeros(1, dtype=np.int64)
        v = np.array(self.elements[j], dtype=np.int64) - 1
        composed = self._table[:, v]  # row i is u_i o v in one-line form
        return np.searchsorted(self._codes, (composed - 1) @ self._radix)

    def __repr__(self) -> str:
        return f"SymmetricGroupBasis({self.n})"


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> SymmetricGroupBasis:
    return SymmetricGroupBasis(n)


class GroupAlgebraElement(AlgebraElement):
    """Element of kS_n; keys are one-line permutations."""

    __slots__ = ()

    @property
    def n(self) -> int:
        return self.basis.n


def element(n: int, mapping: Mapping[Permutation, object], field: Field = QQ) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_dict(symmetric_group(n), {tuple(k): v for k, v in mapping.items()}, field)


def permutation_element(w: Permutation, field: Field = QQ) -> GroupAlgebraElement:
    w = cb.check_permutation(w)
    return element(len(w), {w: 1}, field)


def unit(n: int, field: Field = QQ) -> GroupAlgebraElement:
    return GroupAlgebraElement.one(symmetric_group(n), field)


def zero(n: int, field: Field = QQ) -> GroupAlgebraElement:
    return GroupAlgebraElement.zero(symmetric_group(n), field)


def ga_add(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a + b


def ga_scale(c, a: GroupAlgebraElement) -> GroupAlgebraElement:
    return a.scale(c)


def ga_mul(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def w0(n: int, field: Field = QQ) -> GroupAlgebraElement:
    return permutation_element(cb.longest_word(n), field)


def antipode(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """The linear map sending each permutation to its inverse."""
    basis = a.basis
    out = a.field.zeros(len(basis))
    for i, w in enumerate(basis.elements):
        out[basis.index[cb.inverse(w)]] = a.coeffs[i]
    return GroupAlgebraElement(basis, a.field, out)


@lru_cache(maxsize=None)
def _descent_masks(n: int) -> np.ndarray:
    return np.array([cb.descent_set(w).mask for w in symmetric_group(n).elements], dtype=np.int64)


def _indicator(n: int, keep: np.ndarray, field: Field) -> GroupAlgebraElement:
    coeffs = field.zeros(math.factorial(n))
    coeffs[keep] = 1
    return GroupAlgebraElement(symmetric_group(n), field, coeffs)


def basis_B(I: IndexSet, field: Field = QQ) -> GroupAlgebraElement:
    """Sum of all permutations whose descent set lies inside ``I``."""
    masks = _descent_masks(I.n)
    return _indicator(I.n, (masks & ~I.mask) == 0, field)


def basis_B_comp(alpha: Composition, field: Field = QQ) -> GroupAlgebraElement:
    return basis_B(cb.gaps_inv(alpha), field)


def basis_D(I: IndexSet, field: Field = QQ) -> GroupAlgebraElement:
    """Sum of all permutations with descent set exactly ``I``."""
    masks = _descent_masks(I.n)
    return _indicator(I.n, masks == I.mask, field)


def top_to_random(n: int, k: int, field: Field = QQ) -> GroupAlgebraElement:
    """Sum of the w with ``w^-1(k+1) < ... < w^-1(n)``: move the top k cards to random positions."""
    if not 0 <= k <= n:
        raise ValueError(f"k must lie in [0, {n}], got {k}")
    keep = []
    for w in symmetric_group(n).elements:
        winv = cb.inverse(w)
        tail = winv[k:]
        keep.append(all(a < b for a, b in zip(tail, tail[1:])))
    return _indicator(n, np.array(keep, dtype=bool), field)


def top_to_random_cycles(n: int, field: Field = QQ) -> GroupAlgebraElement:
    """The top-to-random shuffle written as the sum of the cycles (1 2 ... i)."""
    out = zero(n, field)
    for i in range(1, n + 1):
        out = out + permutation_element(cb.cycle(n, *range(1, i + 1)), field)
    return out


def weighted_B(gamma, field: Field = QQ) -> GroupAlgebraElement:
    """``sum_alpha gamma_alpha B_alpha`` for a :class:`~descalg.knapsack.WeightVector`."""
    out = zero(gamma.n, field)
    for alpha, g in gamma.items():
        if g:
            out = out + basis_B_comp(alpha, field).scale(g)
    return out
