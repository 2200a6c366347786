"""Dense elements of a finite-dimensional monoid algebra.

Both the group algebra kS_n and the face algebra kF are monoid algebras on a
finite basis. An element is a coefficient vector indexed by basis rank; the
product only needs, for each basis element ``b_j``, the column of indices
``i -> rank(b_i * b_j)``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Any, Hashable, Iterable, Mapping, Sequence

import numpy as np

from .fields import QQ, Field, PrimeField

_INT64_HEADROOM = 2**62


class MonoidBasis:
    """A finite monoid listed in a fixed order.

    Subclasses fill ``elements`` and implement :meth:`_product`. Columns of the
    multiplication table are computed lazily and cached.
    """

    elements: Sequence[Hashable]
    # True when every right multiplication permutes the basis (groups).
    bijective = False
    cache_columns = True

    def __init__(self, elements: Sequence[Hashable]):
        self.elements = tuple(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._columns: dict[int, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def unit(self) -> Hashable:
        raise NotImplementedError

    def _product(self, a, b):
        raise NotImplementedError

    def _compute_column(self, j: int) -> np.ndarray:
        b = self.elements[j]
        idx = self.index
        return np.fromiter((idx[self._product(a, b)] for a in self.elements),
                           dtype=np.int64, count=len(self.elements))

    def right_column(self, j: int) -> np.ndarray:
        """Ranks of ``b_i * b_j`` for every ``i``."""
        col = self._columns.get(j)
        if col is None:
            col = self._compute_column(j)
            if self.cache_columns:
                self._columns[j] = col
        return col

    def rank_of(self, key) -> int:
        try:
            return self.index[key]
        except KeyError:
            raise KeyError(f"{key!r} is not a basis element of {self!r}") from None


def _all_ints(arr: np.ndarray) -> bool:
    return all(type(v) is int for v in arr)


class AlgebraElement:
    """An element of the monoid algebra of ``basis`` over ``field``.

    Immutable by convention: operations always return new elements.
    """

    __slots__ = ("basis", "field", "coeffs")

    def __init__(self, basis: MonoidBasis, field: Field, coeffs: np.ndarray):
        if len(coeffs) != len(basis):
            raise ValueError("coefficient vector has the wrong length")
        self.basis = basis
        self.field = field
        self.coeffs = field.reduce(coeffs)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, basis: MonoidBasis, field: Field = QQ):
        return cls(basis, field, field.zeros(len(basis)))

    @classmethod
    def one(cls, basis: MonoidBasis, field: Field = QQ):
        return cls.from_dict(basis, {basis.unit: 1}, field)

    @classmethod
    def from_dict(cls, basis: MonoidBasis, mapping: Mapping[Any, Any], field: Field = QQ):
        coeffs = field.zeros(len(basis))
        for key, c in mapping.items():
            i = basis.rank_of(key)
            coeffs[i] = field(coeffs[i] + field(c))
        return cls(basis, field, coeffs)

    @classmethod
    def sum_of(cls, basis: MonoidBasis, keys: Iterable, field: Field = QQ):
        coeffs = field.zeros(len(basis))
        for key in keys:
            coeffs[basis.rank_of(key)] += 1
        return cls(basis, field, coeffs)

    def _new(self, coeffs: np.ndarray):
        return type(self)(self.basis, self.field, coeffs)

    def _check(self, other: AlgebraElement):
        if other.basis is not self.basis:
            raise ValueError("elements live in different algebras")
        if other.field != self.field:
            raise ValueError(f"field mismatch: {self.field!r} vs {other.field!r}")

    # -- linear structure ---------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + self.one(self.basis, self.field).scale(other)
        self._check(other)
        return self._new(self.coeffs + other.coeffs)

    __radd__ = __add__

    def __neg__(self):
        return self._new(-self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, AlgebraElement):
            return self + (-self.one(self.basis, self.field).scale(other))
        self._check(other)
        return self._new(self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = self.field(c)
        return self._new(self.coeffs * c)

    # -- multiplication -----------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return self._new(_product(self, other))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = self.one(self.basis, self.field)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    # -- inspection ---------------------------------------------------------

    def nonzero_indices(self) -> np.ndarray:
        return np.flatnonzero(self.coeffs != 0)

    def is_zero(self) -> bool:
        return not np.any(self.coeffs != 0)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraElement):
            if other == 0:
                return self.is_zero()
            return NotImplemented
        return (other.basis is self.basis and other.field == self.field
                and bool(np.all(self.coeffs == other.coeffs)))

    __hash__ = None

    def coeff(self, key):
        return self.coeffs[self.basis.rank_of(key)]

    def support(self) -> list:
        return [self.basis.elements[i] for i in self.nonzero_indices()]

    def items(self) -> list[tuple[Any, Any]]:
        return [(self.basis.elements[i], self.coeffs[i]) for i in self.nonzero_indices()]

    def to_dict(self) -> dict:
        return dict(self.items())

    def first_nonzero(self):
        """``(basis element, coefficient)`` of the lowest-ranked nonzero term, or None."""
        nz = self.nonzero_indices()
        if len(nz) == 0:
            return None
        i = int(nz[0])
        return self.basis.elements[i], self.coeffs[i]

    def __repr__(self) -> str:
        terms = self.items()
        if not terms:
            return f"{type(self).__name__}(0)"
        shown = " + ".join(f"{c}*{k}" for k, c in terms[:6])
        more = f" + ... ({len(terms)} terms)" if len(terms) > 6 else ""
        return f"{type(self).__name__}({shown}{more})"


def _clear_denominators(values: np.ndarray) -> tuple[np.ndarray, int]:
    """Integer vector ``values * d`` and the common denominator ``d``."""
    if _all_ints(values):
        return values, 1
    d = 1
    for v in values:
        if type(v) is not int:
            d = math.lcm(d, v.denominator)
    return np.array([int(v * d) for v in values], dtype=object), d


def _product(x: AlgebraElement, y: AlgebraElement) -> np.ndarray:
    basis, field = x.basis, x.field
    support = np.flatnonzero(y.coeffs != 0)
    if isinstance(field, PrimeField):
        return _product_mod_p(basis, x.coeffs, y.coeffs, support, field.p)
    # Over QQ: multiply integer numerators, divide by the common denominator once.
    xs, dx = _clear_denominators(x.coeffs)
    ys, dy = _clear_denominators(y.coeffs[support])
    out = _integer_product(basis, xs, ys, support)
    d = dx * dy
    if d == 1:
        return out
    return np.array([QQ(Fraction(int(v), d)) for v in out], dtype=object)


def _integer_product(basis, xs, ys, support) -> np.ndarray:
    if len(support):
        # Bijective columns never collide; otherwise every x_i can pile up on one index.
        x_mass = max(map(abs, xs)) if basis.bijective else sum(map(abs, xs))
        if x_mass * sum(map(abs, ys)) < _INT64_HEADROOM:
            out = _accumulate(basis, xs.astype(np.int64), ys.astype(np.int64),
                              support, np.zeros(len(basis), dtype=np.int64))
            return out.astype(object)
    return _accumulate(basis, xs, ys, support, np.zeros(len(basis), dtype=object))


def _accumulate(basis, xs, weights, support, out):
    if basis.bijective:
        for c, j in zip(weights, support):
            out[basis.right_column(int(j))] += c * xs
    else:
        for c, j in zip(weights, support):
            np.add.at(out, basis.right_column(int(j)), c * xs)
    return out


def _product_mod_p(basis, xs, ys, support, p):
    hits_per_column = 1 if basis.bijective else len(basis)
    if hits_per_column * (p - 1) ** 2 + p >= 2**63:
        out = _accumulate(basis, xs.astype(object), ys[support].astype(object), support,
                          np.zeros(len(basis), dtype=object))
        return np.mod(out, p).astype(np.int64)
    out = np.zeros(len(basis), dtype=np.int64)
    # Residues are < p, so each term is < p^2; flush before int64 overflows.
    per_flush = max(1, (2**63 - 1) // (hits_per_column * (p - 1) ** 2 + p) - 1)
    pending = 0
    for j in support:
        col = basis.right_column(int(j))
        term = int(ys[j]) * xs
        if basis.bijective:
            out[col] += term
        else:
            np.add.at(out, col, term)
        pending += 1
        if pending >= per_flush:
            np.mod(out, p, out=out)
            pending = 0
    return np.mod(out, p)
