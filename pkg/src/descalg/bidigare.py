"""Descent-algebra elements in B-coordinates and the Bidigare map into kF.

``rho`` is the basis dictionary ``B_alpha -> B~_alpha`` extended linearly; it
reverses products. Membership tests in either direction are exact linear
solves against the relevant basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from typing import Mapping

import numpy as np

from . import combinatorics as cb
from .combinatorics import Composition
from .exact_linalg import ExactMatrix, solve
from .face_monoid import (FaceAlgebraElement, FaceBasis, btilde, face_basis, face_of_permutation,
                          group_element_act)
from .fields import QQ, Field
from .group_algebra import GroupAlgebraElement, basis_B_comp, symmetric_group


@dataclass(frozen=True, eq=False)
class DescentAlgebraElement:
    """``sum_alpha c_alpha B_alpha``, stored as a sparse composition-keyed map."""

    n: int
    coords: Mapping[Composition, object] = dc_field(default_factory=dict)
    field: Field = QQ

    def __post_init__(self):
        clean = {}
        for alpha, c in dict(self.coords).items():
            alpha = cb.check_composition(alpha, self.n)
            c = self.field(c)
            if not self.field.is_zero(c):
                clean[alpha] = self.field(clean.get(alpha, 0) + c)
        object.__setattr__(self, "coords", {a: c for a, c in clean.items() if c != 0})

    @classmethod
    def basis_element(cls, alpha: Composition, field: Field = QQ) -> DescentAlgebraElement:
        return cls(sum(alpha), {tuple(alpha): 1}, field)

    def items(self) -> list[tuple[Composition, object]]:
        return sorted(self.coords.items(), key=lambda kv: cb.gaps_inv(kv[0]).mask)

    def __add__(self, other: DescentAlgebraElement) -> DescentAlgebraElement:
        out = dict(self.coords)
        for a, c in other.coords.items():
            out[a] = out.get(a, 0) + c
        return DescentAlgebraElement(self.n, out, self.field)

    def scale(self, c) -> DescentAlgebraElement:
        c = self.field(c)
        return DescentAlgebraElement(self.n, {a: v * c for a, v in self.coords.items()}, self.field)

    def __mul__(self, other: DescentAlgebraElement) -> DescentAlgebraElement:
        """Product computed in kS_n and pulled back into B-coordinates."""
        product = from_group_algebra(to_group_algebra(self) * to_group_algebra(other))
        if product is None:
            raise AssertionError("descent algebra is not closed under the product")
        return product

    def __eq__(self, other) -> bool:
        return (isinstance(other, DescentAlgebraElement) and self.n == other.n
                and self.field == other.field and self.coords == other.coords)

    __hash__ = None

    def to_json(self) -> str:
        return json.dumps({cb.format_composition(a): self.field.to_str(c) for a, c in self.items()})

    @classmethod
    def from_json(cls, n: int, text: str, field: Field = QQ) -> DescentAlgebraElement:
        raw = json.loads(text)
        return cls(n, {cb.parse_composition(k, n): field(v) for k, v in raw.items()}, field)

    def __repr__(self) -> str:
        terms = " + ".join(f"{c}*B{cb.format_composition(a)}" for a, c in self.items()) or "0"
        return f"DescentAlgebraElement(n={self.n}: {terms})"


# -- maps ----------------------------------------------------------------------------


def rho(x: DescentAlgebraElement) -> FaceAlgebraElement:
    out = FaceAlgebraElement.zero(face_basis(x.n), x.field)
    for alpha, c in x.items():
        out = out + btilde(alpha, x.field).scale(c)
    return out


def to_group_algebra(x: DescentAlgebraElement) -> GroupAlgebraElement:
    out = GroupAlgebraElement.zero(symmetric_group(x.n), x.field)
    for alpha, c in x.items():
        out = out + basis_B_comp(alpha, x.field).scale(c)
    return out


@lru_cache(maxsize=None)
def _coordinate_matrix(kind: str, n: int, field: Field) -> tuple[ExactMatrix, tuple[Composition, ...]]:
    comps = tuple(cb.enumerate_compositions(n))
    build = basis_B_comp if kind == "group" else btilde
    columns = [build(alpha, field).coeffs for alpha in comps]
    return ExactMatrix(field, np.stack(columns, axis=1)), comps


def _pull_back(kind: str, y, n: int) -> DescentAlgebraElement | None:
    M, comps = _coordinate_matrix(kind, n, y.field)
    x = solve(M, list(y.coeffs))
    if x is None:
        return None
    return DescentAlgebraElement(n, dict(zip(comps, x)), y.field)


def from_group_algebra(a: GroupAlgebraElement) -> DescentAlgebraElement | None:
    """B-coordinates of ``a``, or None when ``a`` lies outside the descent algebra."""
    return _pull_back("group", a, a.n)


def rho_inv(y: FaceAlgebraElement) -> DescentAlgebraElement:
    """Inverse of :func:`rho` on the span of the orbit sums."""
    if not isinstance(y.basis, FaceBasis):
        raise TypeError("rho_inv expects a face-algebra element")
    x = _pull_back("face", y, y.n)
    if x is None:
        lead = y.first_nonzero()
        raise ValueError(f"element is not an S_n-invariant orbit-sum combination (leading term {lead[1]}*({lead[0]}))")
    return x


def act_by_descent_element(x: DescentAlgebraElement, y: FaceAlgebraElement) -> FaceAlgebraElement:
    """``x`` acting on kF blockwise through its permutation expansion."""
    return group_element_act(to_group_algebra(x), y)


def identity_face_element(n: int, field: Field = QQ) -> FaceAlgebraElement:
    """``P_id`` as an element of kF."""
    return FaceAlgebraElement.from_dict(face_basis(n), {face_of_permutation(cb.identity(n)): 1}, field)


def check_standard_face_identity(alpha: Composition, field: Field = QQ) -> bool:
    """``B~_alpha * P_id == rho^-1(B~_alpha) . P_id`` with the right side acting blockwise."""
    b = btilde(alpha, field)
    p = identity_face_element(sum(alpha), field)
    return b * p == act_by_descent_element(rho_inv(b), p)


__all__ = [
    "DescentAlgebraElement", "rho", "rho_inv", "to_group_algebra", "from_group_algebra",
    "act_by_descent_element", "identity_face_element", "check_standard_face_identity",
]
